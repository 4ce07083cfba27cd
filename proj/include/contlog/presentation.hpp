#ifndef CONTLOG_PRESENTATION_HPP
#define CONTLOG_PRESENTATION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "contlog/completion.hpp"

namespace contlog {

/// Default stage budget for predicate queries under the bundled test
/// enumeration (documented in the README; exceeding it reports a timeout
/// rather than answering).
inline constexpr std::uint64_t kDefaultQueryStageBudget = 320;

/// The point numbering g: even codes walk the constants of L⁺ (base first,
/// then witness constants), odd codes the variables.
class GNumbering {
public:
  explicit GNumbering(const HenkinSignature& hsig) : hsig_(hsig) {}

  Term point(const Nat& n) const;
  /// Inverse on distinguished points (constants and variables).
  std::optional<Nat> index(const Term& t) const;

private:
  HenkinSignature hsig_;
};

struct QueryStats {
  std::uint64_t name_reads = 0;
  std::uint64_t structure_reads_total = 0;
  std::uint64_t structure_reads_inside_name = 0;
  std::uint64_t structure_reads_outside_name() const {
    return structure_reads_total - structure_reads_inside_name;
  }
};

struct QueryResult {
  Rational answer;
  std::optional<Rational> max_lower;  // max E, absent when E is empty
  std::optional<Rational> min_rest;   // min D\E, absent when D\E is empty
  std::uint64_t stage_m = 0;          // the least M the query used
  std::vector<Rational> undecided;    // dyadics left undecided at stop (≤1)
  QueryStats stats;
};

/// Raised when the stage budget runs out before enough dyadic comparisons
/// are decided; carries the dyadics still undecided.
class QueryTimeout : public BudgetExhausted {
public:
  QueryTimeout(const std::string& what, std::vector<Rational> undecided)
      : BudgetExhausted(what), undecided_(std::move(undecided)) {}
  const std::vector<Rational>& undecided() const { return undecided_; }

private:
  std::vector<Rational> undecided_;
};

/// The queryable presentation of the Henkin structure a name induces:
/// rational points are L⁺-terms over ran(g), and predicate values are
/// bracketed by the dyadic comparison wffs the completion decides.
class PresentationHandle {
public:
  PresentationHandle(const Signature& base_sig, TheoryName& name,
                     const WffEnumeration& henkin_enum,
                     std::uint64_t stage_budget = kDefaultQueryStageBudget,
                     CompletionBudgets completion_budgets = {});

  /// Answer within 2^{-(k+1)} of P^{M_Γ}(t⃗) for every maximally consistent
  /// Henkin-complete Γ extending the completed theory.
  QueryResult query_predicate(unsigned pred, const std::vector<Term>& terms, std::uint64_t k);
  QueryResult query_distance(const Term& a, const Term& b, std::uint64_t k);

  const CompletionEngine& engine() const { return engine_; }
  CompletionEngine& engine() { return engine_; }
  const GNumbering& g() const { return g_; }
  std::uint64_t stage_budget() const { return stage_budget_; }

private:
  HenkinSignature hsig_;
  CompletionEngine engine_;
  GNumbering g_;
  std::uint64_t stage_budget_;
  WffCoder henkin_coder_;
};

/// The dyadic grid of a query: values with denominator < 2^{k+2}, one
/// lowest-terms numeral each, ascending.
std::vector<Dyad> query_dyadics(std::uint64_t k);

} // namespace contlog

#endif
