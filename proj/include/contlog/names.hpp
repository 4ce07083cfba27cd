#ifndef CONTLOG_NAMES_HPP
#define CONTLOG_NAMES_HPP

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "contlog/coding.hpp"
#include "contlog/structure.hpp"

namespace contlog {

// Cantor pairing: ⟨x,y⟩ = (x+y)(x+y+1)/2 + y, a bijection ℕ² ↔ ℕ.
Nat cantor_pair(const Nat& x, const Nat& y);
std::pair<Nat, Nat> cantor_unpair(const Nat& z);
// Triples code as ⟨⟨n,k⟩,m⟩.
Nat triple_encode(const Nat& n, const Nat& k, const Nat& m);
std::array<Nat, 3> triple_decode(const Nat& z);

// The fixed enumeration (q_m) of the rationals in [0,1]: unpair m to (a,b);
// b > 0 gives a/(a+b), b = 0 gives 0 for a = 0 and 1 otherwise. Encode
// returns the least preimage.
Rational rational_decode(const Nat& m);
Nat rational_encode(const Rational& q);

/// Raised when a stream scan or stage loop exhausts its step budget.
class BudgetExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A name of a theory: the stream X with X(⟨n,k⟩) carrying a rational within
/// 2^{-k} of the degree of truth of the n-th wff. Single-consumer; reads are
/// counted for the reducibility audit.
class TheoryName {
public:
  virtual ~TheoryName() = default;

  /// X(j). Throws std::out_of_range when the backing data ends (finite
  /// replay streams only; constructed names are total).
  Nat at(const Nat& j) {
    ++reads_;
    return value_at(j);
  }

  /// Sequential enumeration of the stream.
  Nat next() { return at(cursor_++); }
  void rewind() { cursor_ = 0; }

  /// Direct response to a (n,k) request: probes position ⟨n,k⟩ and verifies
  /// the triple. Returns the rational when the probe answers.
  std::optional<Rational> request(const Nat& n, const Nat& k);

  std::uint64_t reads() const { return reads_; }

protected:
  virtual Nat value_at(const Nat& j) = 0;

private:
  Nat cursor_ = 0;
  std::uint64_t reads_ = 0;
};

/// Resolves q for (n,k): direct request first, then a sequential scan of the
/// stream under a step budget. Throws BudgetExhausted when neither answers.
Rational name_lookup(TheoryName& x, const Nat& n, const Nat& k, std::uint64_t scan_budget);

/// |answer(n,k) − (φ_n)°_T| ≤ 2^{-k}; deterministic per (n,k).
class DegreeOracle {
public:
  virtual ~DegreeOracle() = default;
  virtual Rational answer(const Nat& n, const Nat& k) = 0;
};

/// Ground-truth oracle for T = Th(M) over a validated finite structure whose
/// elements are all named by constants: the degree of φ is the value of its
/// sup-closure in M, exactly.
class FiniteModelOracle final : public DegreeOracle {
public:
  FiniteModelOracle(const FiniteStructure& m, const WffCoder& base_coder);
  Rational answer(const Nat& n, const Nat& k) override;

  /// Exact degree of an explicit wff (not via its code).
  Rational degree(const Wff& w);

  const FiniteStructure& model() const { return *m_; }

private:
  const FiniteStructure* m_;
  WffCoder coder_;
  Evaluator eval_;
};

std::unique_ptr<FiniteModelOracle> degree_oracle_from_finite_model(const FiniteStructure& m,
                                                                   const WffCoder& base_coder);

/// The name constructed from an oracle: X(⟨n,k⟩) = ⟨n,k,encode(o(n,k))⟩.
class OracleBackedName final : public TheoryName {
public:
  explicit OracleBackedName(DegreeOracle& oracle) : oracle_(&oracle) {}

protected:
  Nat value_at(const Nat& j) override;

private:
  DegreeOracle* oracle_;
};

/// A finite replay stream (name prefix from a file).
class StreamName final : public TheoryName {
public:
  explicit StreamName(std::vector<Nat> values) : values_(std::move(values)) {}

protected:
  Nat value_at(const Nat& j) override;

private:
  std::vector<Nat> values_;
};

/// The scan-based oracle a name induces: enumerate ran(X) until a triple for
/// (n,k) appears. The step budget turns divergence into BudgetExhausted.
class NameBackedOracle final : public DegreeOracle {
public:
  NameBackedOracle(TheoryName& name, std::uint64_t scan_budget)
      : name_(&name), budget_(scan_budget) {}
  Rational answer(const Nat& n, const Nat& k) override;

private:
  TheoryName* name_;
  std::uint64_t budget_;
};

std::unique_ptr<OracleBackedName> name_from_oracle(DegreeOracle& oracle);
std::unique_ptr<NameBackedOracle> oracle_from_name(TheoryName& name, std::uint64_t scan_budget);

} // namespace contlog

#endif
