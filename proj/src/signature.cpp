#include "contlog/signature.hpp"

#include <stdexcept>

namespace contlog {

Signature::Signature() {
  preds_.push_back(PredicateSymbol{"d", 2, Modulus::identity()});
}

unsigned Signature::add_predicate(const std::string& name, unsigned arity, Modulus m) {
  if (arity < 1) throw std::invalid_argument("predicate arity must be >= 1: " + name);
  if (name_taken(name)) throw std::invalid_argument("duplicate symbol: " + name);
  preds_.push_back(PredicateSymbol{name, arity, std::move(m)});
  return static_cast<unsigned>(preds_.size() - 1);
}

unsigned Signature::add_function(const std::string& name, unsigned arity, Modulus m) {
  if (arity < 1) throw std::invalid_argument("function arity must be >= 1: " + name);
  if (name_taken(name)) throw std::invalid_argument("duplicate symbol: " + name);
  funs_.push_back(FunctionSymbol{name, arity, std::move(m)});
  return static_cast<unsigned>(funs_.size() - 1);
}

unsigned Signature::add_constant(const std::string& name) {
  if (name_taken(name)) throw std::invalid_argument("duplicate symbol: " + name);
  consts_.push_back(name);
  return static_cast<unsigned>(consts_.size() - 1);
}

const PredicateSymbol& Signature::predicate(unsigned id) const {
  if (id >= preds_.size()) throw std::out_of_range("predicate id out of range");
  return preds_[id];
}

const FunctionSymbol& Signature::function(unsigned id) const {
  if (id >= funs_.size()) throw std::out_of_range("function id out of range");
  return funs_[id];
}

const std::string& Signature::constant_name(unsigned id) const {
  if (id >= consts_.size()) throw std::out_of_range("constant id out of range");
  return consts_[id];
}

bool Signature::find_predicate(const std::string& name, unsigned& id) const {
  for (unsigned i = 0; i < preds_.size(); ++i)
    if (preds_[i].name == name) { id = i; return true; }
  return false;
}

bool Signature::find_function(const std::string& name, unsigned& id) const {
  for (unsigned i = 0; i < funs_.size(); ++i)
    if (funs_[i].name == name) { id = i; return true; }
  return false;
}

bool Signature::find_constant(const std::string& name, unsigned& id) const {
  for (unsigned i = 0; i < consts_.size(); ++i)
    if (consts_[i] == name) { id = i; return true; }
  return false;
}

bool Signature::name_taken(const std::string& name) const {
  unsigned id;
  return find_predicate(name, id) || find_function(name, id) || find_constant(name, id);
}

} // namespace contlog
