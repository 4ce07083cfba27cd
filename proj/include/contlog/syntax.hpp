#ifndef CONTLOG_SYNTAX_HPP
#define CONTLOG_SYNTAX_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "contlog/signature.hpp"
#include "contlog/value.hpp"

namespace contlog {

/// A dyadic numeral ℓ/2^k as syntax: numerator and exponent, ℓ ≤ 2^k.
struct Dyad {
  Nat num;
  std::uint64_t expo = 0;

  Dyad() : num(0) {}
  Dyad(Nat n, std::uint64_t k);

  Value value() const;
  /// Lowest-terms representative of the same rational value.
  Dyad reduced() const;

  friend bool operator==(const Dyad& a, const Dyad& b) {
    return a.expo == b.expo && a.num == b.num;
  }
  friend bool operator!=(const Dyad& a, const Dyad& b) { return !(a == b); }
};

class Wff;
class Term;

/// The Henkin witness constant c_{φ,x,p,q}. Its identity is the whole
/// quadruple; the wff inside is part of the name, not a term position.
struct HenkinConstant;
using HenkinConstantPtr = std::shared_ptr<const HenkinConstant>;

enum class TermTag : std::uint8_t { Var, Const, HenkinConst, App };

struct TermNode;
using TermNodePtr = std::shared_ptr<const TermNode>;

class Term {
public:
  Term() = default;
  explicit Term(TermNodePtr n) : node_(std::move(n)) {}

  TermTag tag() const;
  std::uint64_t var_index() const;         // Var
  unsigned const_id() const;               // Const
  const HenkinConstantPtr& henkin() const; // HenkinConst
  unsigned fun_id() const;                 // App
  const std::vector<Term>& args() const;   // App

  const std::vector<std::uint64_t>& free_vars() const; // sorted
  bool has_henkin() const;
  std::size_t hash() const;
  std::size_t size() const; // node count
  const TermNodePtr& node() const { return node_; }
  bool valid() const { return node_ != nullptr; }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

private:
  TermNodePtr node_;
};

Term term_var(std::uint64_t index);
Term term_const(unsigned const_id);
Term term_henkin(HenkinConstantPtr c);
Term term_henkin(const Wff& phi, std::uint64_t var, const Dyad& p, const Dyad& q);
Term term_app(const Signature& sig, unsigned fun_id, std::vector<Term> args);

enum class WffTag : std::uint8_t {
  // core
  Atomic, Neg, Half, TruncSub, Sup, Inf,
  // shorthand layer
  Or, And, Iff, Plus, Times, NumLit, SupVec, InfVec,
};

bool is_core_tag(WffTag t);

struct WffNode;
using WffNodePtr = std::shared_ptr<const WffNode>;

/// Immutable wff tree. Core connectives are {atomic, ¬, ½, ∸, sup, inf};
/// the shorthand layer is eliminated by expand_shorthand.
class Wff {
public:
  Wff() = default;
  explicit Wff(WffNodePtr n) : node_(std::move(n)) {}

  WffTag tag() const;
  unsigned pred_id() const;                 // Atomic
  const std::vector<Term>& terms() const;   // Atomic
  const Wff& child(std::size_t i = 0) const;
  std::size_t child_count() const;
  std::uint64_t bound_var() const;          // Sup/Inf
  const std::vector<std::uint64_t>& bound_vars() const; // SupVec/InfVec
  std::uint64_t scalar() const;             // Times
  const Dyad& numeral() const;              // NumLit

  const std::vector<std::uint64_t>& free_vars() const; // sorted
  bool has_henkin() const;
  bool is_core() const;   // no shorthand node anywhere
  bool is_sentence() const { return free_vars().empty(); }
  std::size_t hash() const;
  std::size_t size() const;
  const WffNodePtr& node() const { return node_; }
  bool valid() const { return node_ != nullptr; }

  friend bool operator==(const Wff& a, const Wff& b);
  friend bool operator!=(const Wff& a, const Wff& b) { return !(a == b); }

private:
  WffNodePtr node_;
};

struct HenkinConstant {
  Wff phi;
  std::uint64_t var = 0;
  Dyad p, q;
  std::size_t hash = 0;

  /// Henkin nesting depth; strictly greater than the layer of phi.
  unsigned layer() const;
};

HenkinConstantPtr make_henkin_constant(const Wff& phi, std::uint64_t var,
                                       const Dyad& p, const Dyad& q);
bool henkin_equal(const HenkinConstant& a, const HenkinConstant& b);

// Builders. Atomic checks arity against the signature.
Wff wff_atomic(const Signature& sig, unsigned pred_id, std::vector<Term> terms);
Wff wff_neg(const Wff& w);
Wff wff_half(const Wff& w);
Wff wff_truncsub(const Wff& a, const Wff& b);
Wff wff_sup(std::uint64_t var, const Wff& w);
Wff wff_inf(std::uint64_t var, const Wff& w);
Wff wff_or(const Wff& a, const Wff& b);
Wff wff_and(const Wff& a, const Wff& b);
Wff wff_iff(const Wff& a, const Wff& b);
Wff wff_plus(const Wff& a, const Wff& b);
Wff wff_times(std::uint64_t m, const Wff& w);
Wff wff_num(const Dyad& d);
Wff wff_num(Nat num, std::uint64_t expo);
Wff wff_sup_vec(std::vector<std::uint64_t> vars, const Wff& w);
Wff wff_inf_vec(std::vector<std::uint64_t> vars, const Wff& w);

// Named core sentences built by the shorthand table.
Wff wff_zero(); // sup_{x0} d(x0,x0)
Wff wff_one();  // ¬ 0̲
Wff wff_pow2neg(std::uint64_t k); // ½ … ½ 1̲, k halves

/// Rewrites every shorthand node by its table row; total and idempotent;
/// the image is core syntax only.
Wff expand_shorthand(const Wff& w);

/// Replaces free occurrences of variable x by t. The flag is false exactly
/// when a variable of t would be captured by a quantifier of w; in that case
/// w is returned unchanged.
struct SubstitutionResult {
  Wff wff;
  bool correct = true;
};
SubstitutionResult substitute(const Wff& w, const Term& t, std::uint64_t x);

/// Variable indices occurring anywhere in w, free or bound.
std::vector<std::uint64_t> occurring_vars(const Wff& w);

/// sup-binds the free variables of w in increasing index order (the
/// innermost binder carries the largest index).
Wff sup_close(const Wff& w);

/// Henkin constants appearing as terms, in first-occurrence order
/// (left-to-right preorder), deduplicated.
std::vector<HenkinConstantPtr> collect_henkin_constants(const Wff& w);

/// Replaces every term occurrence of the given Henkin constant by t.
Wff replace_henkin_constant(const Wff& w, const HenkinConstantPtr& c, const Term& t);

// Canonical s-expression printing.
std::string print_term(const Term& t, const Signature& sig);
std::string print_wff(const Wff& w, const Signature& sig);

} // namespace contlog

#endif
