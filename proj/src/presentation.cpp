#include "contlog/presentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace contlog {

Term GNumbering::point(const Nat& n) const {
  Nat half = n / 2;
  if (mpz_even_p(n.get_mpz_t())) return hsig_.constant_from_code(half);
  if (!half.fits_ulong_p()) throw std::length_error("variable index exceeds the representable range");
  return term_var(half.get_ui());
}

std::optional<Nat> GNumbering::index(const Term& t) const {
  switch (t.tag()) {
    case TermTag::Var:
      return Nat(static_cast<unsigned long>(t.var_index())) * 2 + 1;
    case TermTag::Const:
    case TermTag::HenkinConst:
      return hsig_.constant_code(t) * 2;
    case TermTag::App:
      return std::nullopt; // a rational point, but not a distinguished one
  }
  return std::nullopt;
}

std::vector<Dyad> query_dyadics(std::uint64_t k) {
  std::vector<Dyad> out;
  for (std::uint64_t j = 0; j <= k + 1; ++j) {
    Nat top = 1;
    mpz_mul_2exp(top.get_mpz_t(), top.get_mpz_t(), j);
    for (Nat l = 0; l <= top; ++l) {
      Dyad d = Dyad(l, j).reduced();
      bool seen = false;
      for (const Dyad& have : out)
        if (have == d) { seen = true; break; }
      if (!seen) out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end(), [](const Dyad& a, const Dyad& b) {
    return a.value() < b.value();
  });
  return out;
}

PresentationHandle::PresentationHandle(const Signature& base_sig, TheoryName& name,
                                       const WffEnumeration& henkin_enum,
                                       std::uint64_t stage_budget,
                                       CompletionBudgets completion_budgets)
    : hsig_(base_sig),
      engine_(base_sig, name, henkin_enum, completion_budgets),
      g_(hsig_),
      stage_budget_(stage_budget),
      henkin_coder_(base_sig, CodingLevel::Henkin) {}

QueryResult PresentationHandle::query_predicate(unsigned pred, const std::vector<Term>& terms,
                                                std::uint64_t k) {
  const Signature& sig = engine_.base_signature();
  if (terms.size() != sig.predicate(pred).arity)
    throw std::invalid_argument("query arity mismatch for " + sig.predicate(pred).name);

  std::uint64_t reads0 = engine_.name().reads();
  std::uint64_t sreads0 = EvalInstrumentation::structure_reads;
  std::uint64_t inreads0 = EvalInstrumentation::reads_inside_name;

  Wff atom = wff_atomic(sig, pred, terms);
  std::vector<Dyad> dyads = query_dyadics(k);
  struct Comparison {
    Dyad dyad;
    Rational value;
    Nat lower_code; // p̲ ∸ P(t⃗): p is a provable lower bound
    Nat upper_code; // P(t⃗) ∸ p̲: p is a provable upper bound
  };
  std::vector<Comparison> comps;
  comps.reserve(dyads.size());
  const WffEnumeration& en = engine_.enumeration();
  for (const Dyad& d : dyads) {
    Wff numeral = wff_num(d);
    comps.push_back(Comparison{d, d.value().rational(),
                               en.encode(wff_truncsub(numeral, atom)),
                               en.encode(wff_truncsub(atom, numeral))});
  }

  // advance to the least M ≥ k+2 with at most one undecided dyadic
  std::uint64_t m = k + 2;
  std::vector<Rational> undecided;
  while (true) {
    engine_.run_to_stage(m + 1);
    undecided.clear();
    for (const Comparison& c : comps) {
      bool lower = engine_.in_phi(c.lower_code, m + 1);
      bool upper = engine_.in_phi(c.upper_code, m + 1);
      if (lower && upper)
        throw std::logic_error("both directions of a dyadic comparison entered the completion");
      if (!lower && !upper) undecided.push_back(c.value);
    }
    if (undecided.size() <= 1) break;
    ++m;
    if (m > stage_budget_)
      throw QueryTimeout("stage budget exhausted with " + std::to_string(undecided.size()) +
                             " undecided dyadics",
                         undecided);
  }

  std::optional<Rational> max_lower;
  std::optional<Rational> min_rest;
  for (const Comparison& c : comps) {
    if (engine_.in_phi(c.lower_code, m + 1)) {
      if (!max_lower || c.value > *max_lower) max_lower = c.value;
    } else {
      if (!min_rest || c.value < *min_rest) min_rest = c.value;
    }
  }

  // the proof's sandwich: max E ≤ min(D\E) + 2^{-(k+2)}
  if (max_lower && min_rest && *max_lower > *min_rest + pow2_neg(k + 2))
    throw std::logic_error("bracket inversion: max E > min(D\\E) + 2^{-(k+2)}");

  QueryResult out;
  out.answer = min_rest ? *min_rest : Rational(1);
  out.max_lower = max_lower;
  out.min_rest = min_rest;
  out.stage_m = m;
  out.undecided = undecided;
  out.stats.name_reads = engine_.name().reads() - reads0;
  out.stats.structure_reads_total = EvalInstrumentation::structure_reads - sreads0;
  out.stats.structure_reads_inside_name = EvalInstrumentation::reads_inside_name - inreads0;
  return out;
}

QueryResult PresentationHandle::query_distance(const Term& a, const Term& b, std::uint64_t k) {
  return query_predicate(Signature::metric_symbol, {a, b}, k);
}

} // namespace contlog
