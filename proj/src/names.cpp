#include "contlog/names.hpp"

namespace contlog {

Nat cantor_pair(const Nat& x, const Nat& y) {
  Nat s = x + y;
  return s * (s + 1) / 2 + y;
}

std::pair<Nat, Nat> cantor_unpair(const Nat& z) {
  // s = floor((sqrt(8z+1)-1)/2)
  Nat t = 8 * z + 1;
  Nat r;
  mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
  Nat s = (r - 1) / 2;
  Nat base = s * (s + 1) / 2;
  Nat y = z - base;
  Nat x = s - y;
  return {x, y};
}

Nat triple_encode(const Nat& n, const Nat& k, const Nat& m) {
  return cantor_pair(cantor_pair(n, k), m);
}

std::array<Nat, 3> triple_decode(const Nat& z) {
  auto [nk, m] = cantor_unpair(z);
  auto [n, k] = cantor_unpair(nk);
  return {n, k, m};
}

Rational rational_decode(const Nat& m) {
  auto [a, b] = cantor_unpair(m);
  if (b == 0) return a == 0 ? Rational(0) : Rational(1);
  Rational q(a, a + b);
  q.canonicalize();
  return q;
}

Nat rational_encode(const Rational& q) {
  if (q < 0 || q > 1) throw std::domain_error("rational outside [0,1]: " + q.get_str());
  if (q == 0) return cantor_pair(0, 0);
  if (q == 1) return cantor_pair(1, 0);
  Nat u = q.get_num();
  Nat v = q.get_den();
  return cantor_pair(u, v - u);
}

std::optional<Rational> TheoryName::request(const Nat& n, const Nat& k) {
  Nat v;
  try {
    v = at(cantor_pair(n, k));
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
  auto [tn, tk, tm] = triple_decode(v);
  if (tn != n || tk != k) return std::nullopt;
  return rational_decode(tm);
}

Rational name_lookup(TheoryName& x, const Nat& n, const Nat& k, std::uint64_t scan_budget) {
  if (auto direct = x.request(n, k)) return *direct;
  x.rewind();
  for (std::uint64_t step = 0; step < scan_budget; ++step) {
    Nat v;
    try {
      v = x.next();
    } catch (const std::out_of_range&) {
      throw BudgetExhausted("name stream ended before answering (n,k)");
    }
    auto [tn, tk, tm] = triple_decode(v);
    if (tn == n && tk == k) return rational_decode(tm);
  }
  throw BudgetExhausted("name scan budget exhausted before answering (n,k)");
}

FiniteModelOracle::FiniteModelOracle(const FiniteStructure& m, const WffCoder& base_coder)
    : m_(&m), coder_(base_coder), eval_(m) {
  if (coder_.level() != CodingLevel::Base)
    throw std::invalid_argument("the finite-model oracle answers for base-level wff codes");
  // Th(M) determines sentence values only when every element is named.
  std::vector<bool> named(m.size(), false);
  for (unsigned c = 0; c < m.signature().constant_count(); ++c)
    named[m.const_entry(c)] = true;
  for (unsigned e = 0; e < m.size(); ++e)
    if (!named[e])
      throw std::invalid_argument("finite-model oracle requires element-naming constants; " +
                                  m.element_name(e) + " is unnamed");
}

Rational FiniteModelOracle::degree(const Wff& w) {
  Wff closed = sup_close(expand_shorthand(w));
  Wff interned = eval_.intern(closed);
  return eval_.eval(interned, Assignment(0)).rational();
}

Rational FiniteModelOracle::answer(const Nat& n, const Nat& k) {
  (void)k; // answers are exact, so every precision is satisfied
  return degree(coder_.decode(n));
}

std::unique_ptr<FiniteModelOracle> degree_oracle_from_finite_model(const FiniteStructure& m,
                                                                   const WffCoder& base_coder) {
  return std::make_unique<FiniteModelOracle>(m, base_coder);
}

Nat OracleBackedName::value_at(const Nat& j) {
  NameComputationScope scope; // ground-truth reads below here belong to the name
  auto [n, k] = cantor_unpair(j);
  Nat m = rational_encode(oracle_->answer(n, k));
  return triple_encode(n, k, m);
}

Nat StreamName::value_at(const Nat& j) {
  if (j >= values_.size())
    throw std::out_of_range("name stream position beyond the stored prefix");
  return values_[j.get_ui()];
}

Rational NameBackedOracle::answer(const Nat& n, const Nat& k) {
  name_->rewind();
  for (std::uint64_t step = 0; step < budget_; ++step) {
    Nat v;
    try {
      v = name_->next();
    } catch (const std::out_of_range&) {
      throw BudgetExhausted("name stream ended before answering (n,k)");
    }
    auto [tn, tk, tm] = triple_decode(v);
    if (tn == n && tk == k) return rational_decode(tm);
  }
  throw BudgetExhausted("name scan budget exhausted before answering (n,k)");
}

std::unique_ptr<OracleBackedName> name_from_oracle(DegreeOracle& oracle) {
  return std::make_unique<OracleBackedName>(oracle);
}

std::unique_ptr<NameBackedOracle> oracle_from_name(TheoryName& name, std::uint64_t scan_budget) {
  return std::make_unique<NameBackedOracle>(name, scan_budget);
}

} // namespace contlog
