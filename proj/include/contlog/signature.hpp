#ifndef CONTLOG_SIGNATURE_HPP
#define CONTLOG_SIGNATURE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "contlog/value.hpp"

namespace contlog {

/// A modulus of continuity: a total map ℕ→ℕ. Represented moduli are the
/// identity, a shift n ↦ n+J, or a finite table with a shift tail, so every
/// represented modulus is eventually strictly increasing (structure
/// validation relies on that to bound its check).
struct Modulus {
  enum class Kind { Identity, Shift, Table };
  Kind kind = Kind::Identity;
  std::uint64_t shift = 0;                // for Shift and the Table tail
  std::vector<std::uint64_t> table;       // values at 0..table.size()-1

  std::uint64_t operator()(std::uint64_t n) const {
    switch (kind) {
      case Kind::Identity: return n;
      case Kind::Shift: return n + shift;
      case Kind::Table:
        if (n < table.size()) return table[n];
        return n + shift;
    }
    return n;
  }

  static Modulus identity() { return Modulus{}; }
  static Modulus shifted(std::uint64_t j) { return Modulus{Kind::Shift, j, {}}; }
  static Modulus tabled(std::vector<std::uint64_t> t, std::uint64_t tail) {
    return Modulus{Kind::Table, tail, std::move(t)};
  }
};

struct PredicateSymbol {
  std::string name;
  unsigned arity = 1;
  Modulus modulus;
};

struct FunctionSymbol {
  std::string name;
  unsigned arity = 1;
  Modulus modulus;
};

/// Symbol inventory. Predicate 0 is always the metric d (arity 2, identity
/// modulus); symbol codes are positions in the declaration order, giving the
/// effective numbering.
class Signature {
public:
  Signature();

  unsigned add_predicate(const std::string& name, unsigned arity, Modulus m);
  unsigned add_function(const std::string& name, unsigned arity, Modulus m);
  unsigned add_constant(const std::string& name);

  const std::vector<PredicateSymbol>& predicates() const { return preds_; }
  const std::vector<FunctionSymbol>& functions() const { return funs_; }
  const std::vector<std::string>& constants() const { return consts_; }

  static constexpr unsigned metric_symbol = 0;

  unsigned predicate_count() const { return static_cast<unsigned>(preds_.size()); }
  unsigned function_count() const { return static_cast<unsigned>(funs_.size()); }
  unsigned constant_count() const { return static_cast<unsigned>(consts_.size()); }

  const PredicateSymbol& predicate(unsigned id) const;
  const FunctionSymbol& function(unsigned id) const;
  const std::string& constant_name(unsigned id) const;

  // Lookup by name; returns false if absent.
  bool find_predicate(const std::string& name, unsigned& id) const;
  bool find_function(const std::string& name, unsigned& id) const;
  bool find_constant(const std::string& name, unsigned& id) const;

  bool name_taken(const std::string& name) const;

private:
  std::vector<PredicateSymbol> preds_;
  std::vector<FunctionSymbol> funs_;
  std::vector<std::string> consts_;
};

} // namespace contlog

#endif
