#include "contlog/proof.hpp"

#include <algorithm>
#include <stdexcept>

namespace contlog {

std::string schema_name(SchemaId id) {
  switch (id) {
    case SchemaId::I: return "I";
    case SchemaId::II: return "II";
    case SchemaId::III: return "III";
    case SchemaId::IV: return "IV";
    case SchemaId::IVPrime: return "IV'";
    case SchemaId::V: return "V";
    case SchemaId::VI: return "VI";
    case SchemaId::VII: return "VII";
    case SchemaId::VIII: return "VIII";
    case SchemaId::IX: return "IX";
    case SchemaId::X: return "X";
    case SchemaId::XI: return "XI";
    case SchemaId::XII: return "XII";
    case SchemaId::XIII: return "XIII";
    case SchemaId::XIV: return "XIV";
    case SchemaId::XV: return "XV";
  }
  return "?";
}

std::optional<SchemaId> schema_from_name(const std::string& name) {
  static const std::pair<const char*, SchemaId> table[] = {
      {"I", SchemaId::I},       {"II", SchemaId::II},   {"III", SchemaId::III},
      {"IV", SchemaId::IV},     {"IV'", SchemaId::IVPrime}, {"V", SchemaId::V},
      {"VI", SchemaId::VI},     {"VII", SchemaId::VII}, {"VIII", SchemaId::VIII},
      {"IX", SchemaId::IX},     {"X", SchemaId::X},     {"XI", SchemaId::XI},
      {"XII", SchemaId::XII},   {"XIII", SchemaId::XIII}, {"XIV", SchemaId::XIV},
      {"XV", SchemaId::XV},
  };
  for (const auto& [s, id] : table)
    if (name == s) return id;
  return std::nullopt;
}

namespace {

bool free_in(const Wff& w, std::uint64_t x) {
  const auto& fvs = w.free_vars();
  return std::binary_search(fvs.begin(), fvs.end(), x);
}

Wff d_atom(std::uint64_t x, std::uint64_t y) {
  // builds d(x,y) without a signature: the metric is predicate 0, arity 2
  struct Helper {
    static Wff make(std::uint64_t a, std::uint64_t b) {
      Signature dummy; // carries only d
      return wff_atomic(dummy, Signature::metric_symbol, {term_var(a), term_var(b)});
    }
  };
  return Helper::make(x, y);
}

Wff and_core(const Wff& a, const Wff& b) {
  return wff_truncsub(a, wff_truncsub(a, b));
}

} // namespace

Wff instantiate_schema(const Signature& sig, const SchemaInstance& inst) {
  auto want = [&](std::size_t wffs, std::size_t vars, std::size_t terms) {
    if (inst.wffs.size() != wffs || inst.vars.size() != vars || inst.terms.size() != terms)
      throw std::invalid_argument("schema " + schema_name(inst.id) + ": wrong witness shape");
  };
  auto ew = [&](std::size_t i) { return expand_shorthand(inst.wffs.at(i)); };

  switch (inst.id) {
    case SchemaId::I: { // (φ∸ψ)∸φ
      want(2, 0, 0);
      Wff phi = ew(0), psi = ew(1);
      return wff_truncsub(wff_truncsub(phi, psi), phi);
    }
    case SchemaId::II: { // ((θ∸φ)∸(θ∸ψ))∸(ψ∸φ)
      want(3, 0, 0);
      Wff phi = ew(0), psi = ew(1), theta = ew(2);
      return wff_truncsub(
          wff_truncsub(wff_truncsub(theta, phi), wff_truncsub(theta, psi)),
          wff_truncsub(psi, phi));
    }
    case SchemaId::III: { // (φ∸(φ∸ψ))∸(ψ∸(ψ∸φ))
      want(2, 0, 0);
      Wff phi = ew(0), psi = ew(1);
      return wff_truncsub(wff_truncsub(phi, wff_truncsub(phi, psi)),
                          wff_truncsub(psi, wff_truncsub(psi, phi)));
    }
    case SchemaId::IV: { // (φ∸ψ)∸(¬φ∸¬φ), as listed
      want(2, 0, 0);
      Wff phi = ew(0), psi = ew(1);
      return wff_truncsub(wff_truncsub(phi, psi),
                          wff_truncsub(wff_neg(phi), wff_neg(phi)));
    }
    case SchemaId::IVPrime: { // (φ∸ψ)∸(¬ψ∸¬φ)
      want(2, 0, 0);
      Wff phi = ew(0), psi = ew(1);
      return wff_truncsub(wff_truncsub(phi, psi),
                          wff_truncsub(wff_neg(psi), wff_neg(phi)));
    }
    case SchemaId::V: { // (sup_x ψ ∸ sup_x φ) ∸ sup_x(ψ∸φ)
      want(2, 1, 0);
      Wff phi = ew(0), psi = ew(1);
      std::uint64_t x = inst.vars[0];
      return wff_truncsub(wff_truncsub(wff_sup(x, psi), wff_sup(x, phi)),
                          wff_sup(x, wff_truncsub(psi, phi)));
    }
    case SchemaId::VI: { // φ[t/x] ∸ sup_x φ, substitution correct
      want(1, 1, 1);
      Wff phi = ew(0);
      std::uint64_t x = inst.vars[0];
      SubstitutionResult sr = substitute(phi, inst.terms[0], x);
      if (!sr.correct)
        throw std::invalid_argument("schema VI: substitution would capture a variable");
      return wff_truncsub(sr.wff, wff_sup(x, phi));
    }
    case SchemaId::VII: { // sup_x φ ∸ φ, x not free in φ
      want(1, 1, 0);
      Wff phi = ew(0);
      std::uint64_t x = inst.vars[0];
      if (free_in(phi, x))
        throw std::invalid_argument("schema VII: variable occurs free in the body");
      return wff_truncsub(wff_sup(x, phi), phi);
    }
    case SchemaId::VIII: { // inf_x φ ↔ ¬(sup_x ¬φ)
      want(1, 1, 0);
      Wff phi = ew(0);
      std::uint64_t x = inst.vars[0];
      return expand_shorthand(
          wff_iff(wff_inf(x, phi), wff_neg(wff_sup(x, wff_neg(phi)))));
    }
    case SchemaId::IX: { // ½φ ∸ (φ ∸ ½φ)
      want(1, 0, 0);
      Wff phi = ew(0);
      return wff_truncsub(wff_half(phi), wff_truncsub(phi, wff_half(phi)));
    }
    case SchemaId::X: { // (φ ∸ ½φ) ∸ ½φ
      want(1, 0, 0);
      Wff phi = ew(0);
      return wff_truncsub(wff_truncsub(phi, wff_half(phi)), wff_half(phi));
    }
    case SchemaId::XI:
      want(0, 1, 0);
      return d_atom(inst.vars[0], inst.vars[0]);
    case SchemaId::XII:
      want(0, 2, 0);
      return wff_truncsub(d_atom(inst.vars[0], inst.vars[1]),
                          d_atom(inst.vars[1], inst.vars[0]));
    case SchemaId::XIII: {
      want(0, 3, 0);
      std::uint64_t x = inst.vars[0], y = inst.vars[1], z = inst.vars[2];
      return wff_truncsub(wff_truncsub(d_atom(x, z), d_atom(x, y)), d_atom(y, z));
    }
    case SchemaId::XIV: { // modulus axiom for a function symbol
      const FunctionSymbol& f = sig.function(inst.symbol);
      if (inst.vars.size() != 2 || inst.terms.size() + 1 != f.arity ||
          inst.split > inst.terms.size())
        throw std::invalid_argument("schema XIV: wrong witness shape");
      std::uint64_t x = inst.vars[0], y = inst.vars[1];
      std::vector<Term> ax, ay;
      for (unsigned i = 0; i < inst.split; ++i) ax.push_back(inst.terms[i]);
      ax.push_back(term_var(x));
      std::vector<Term> tail(inst.terms.begin() + inst.split, inst.terms.end());
      ay = ax;
      ay[inst.split] = term_var(y);
      for (const Term& t : tail) {
        ax.push_back(t);
        ay.push_back(t);
      }
      Wff guard = wff_truncsub(wff_pow2neg(f.modulus(inst.n)), d_atom(x, y));
      Wff body = wff_truncsub(
          wff_atomic(sig, Signature::metric_symbol,
                     {term_app(sig, inst.symbol, ax), term_app(sig, inst.symbol, ay)}),
          wff_pow2neg(inst.n));
      return and_core(guard, body);
    }
    case SchemaId::XV: { // modulus axiom for a predicate symbol
      const PredicateSymbol& p = sig.predicate(inst.symbol);
      if (inst.vars.size() != 2 || inst.terms.size() + 1 != p.arity ||
          inst.split > inst.terms.size())
        throw std::invalid_argument("schema XV: wrong witness shape");
      std::uint64_t x = inst.vars[0], y = inst.vars[1];
      std::vector<Term> ax, ay;
      for (unsigned i = 0; i < inst.split; ++i) ax.push_back(inst.terms[i]);
      ax.push_back(term_var(x));
      std::vector<Term> tail(inst.terms.begin() + inst.split, inst.terms.end());
      ay = ax;
      ay[inst.split] = term_var(y);
      for (const Term& t : tail) {
        ax.push_back(t);
        ay.push_back(t);
      }
      Wff guard = wff_truncsub(wff_pow2neg(p.modulus(inst.n)), d_atom(x, y));
      Wff body = wff_truncsub(
          wff_truncsub(wff_atomic(sig, inst.symbol, ax), wff_atomic(sig, inst.symbol, ay)),
          wff_pow2neg(inst.n));
      return and_core(guard, body);
    }
  }
  throw std::logic_error("unreachable schema id");
}

// ---- matching ----

namespace {

bool is_sub(const Wff& w) { return w.tag() == WffTag::TruncSub; }
bool is_neg(const Wff& w) { return w.tag() == WffTag::Neg; }
bool is_half(const Wff& w) { return w.tag() == WffTag::Half; }
bool is_sup(const Wff& w) { return w.tag() == WffTag::Sup; }
bool is_inf(const Wff& w) { return w.tag() == WffTag::Inf; }

std::optional<std::uint64_t> as_d_atom_xx(const Wff& w) {
  if (w.tag() != WffTag::Atomic || w.pred_id() != Signature::metric_symbol) return std::nullopt;
  const auto& ts = w.terms();
  if (ts[0].tag() != TermTag::Var || ts[1].tag() != TermTag::Var) return std::nullopt;
  if (ts[0].var_index() != ts[1].var_index()) return std::nullopt;
  return ts[0].var_index();
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> as_d_atom(const Wff& w) {
  if (w.tag() != WffTag::Atomic || w.pred_id() != Signature::metric_symbol) return std::nullopt;
  const auto& ts = w.terms();
  if (ts[0].tag() != TermTag::Var || ts[1].tag() != TermTag::Var) return std::nullopt;
  return std::make_pair(ts[0].var_index(), ts[1].var_index());
}

/// Recognizes the canonical expansion of the numeral 2^{-k}: k halves over 1̲.
std::optional<std::uint64_t> as_pow2_numeral(const Wff& w) {
  std::uint64_t k = 0;
  Wff cur = w;
  while (is_half(cur)) {
    ++k;
    cur = cur.child();
  }
  if (cur == wff_one()) return k;
  return std::nullopt;
}

/// Finds t such that pattern[t/x] == target, walking both trees in parallel.
/// Returns the identity witness when x has no free occurrence.
std::optional<Term> match_substitution_term(const Term& target, const Term& pattern,
                                            std::uint64_t x, bool x_active,
                                            std::optional<Term>& candidate) {
  if (pattern.tag() == TermTag::Var && pattern.var_index() == x && x_active) {
    if (candidate && *candidate != target) return std::nullopt;
    candidate = target;
    return target;
  }
  if (target.tag() != pattern.tag()) return std::nullopt;
  switch (pattern.tag()) {
    case TermTag::Var:
      return target.var_index() == pattern.var_index() ? std::optional<Term>(target)
                                                       : std::nullopt;
    case TermTag::Const:
      return target.const_id() == pattern.const_id() ? std::optional<Term>(target)
                                                     : std::nullopt;
    case TermTag::HenkinConst:
      return henkin_equal(*target.henkin(), *pattern.henkin()) ? std::optional<Term>(target)
                                                               : std::nullopt;
    case TermTag::App: {
      if (target.fun_id() != pattern.fun_id()) return std::nullopt;
      for (std::size_t i = 0; i < pattern.args().size(); ++i)
        if (!match_substitution_term(target.args()[i], pattern.args()[i], x, x_active, candidate))
          return std::nullopt;
      return target;
    }
  }
  return std::nullopt;
}

bool match_substitution_wff(const Wff& target, const Wff& pattern, std::uint64_t x,
                            bool x_active, std::optional<Term>& candidate) {
  if (x_active && !free_in(pattern, x)) {
    x_active = false; // nothing to substitute below; require equality
  }
  if (!x_active) return target == pattern;
  if (target.tag() != pattern.tag()) return false;
  switch (pattern.tag()) {
    case WffTag::Atomic: {
      if (target.pred_id() != pattern.pred_id()) return false;
      for (std::size_t i = 0; i < pattern.terms().size(); ++i)
        if (!match_substitution_term(target.terms()[i], pattern.terms()[i], x, true, candidate))
          return false;
      return true;
    }
    case WffTag::Neg:
    case WffTag::Half:
      return match_substitution_wff(target.child(), pattern.child(), x, true, candidate);
    case WffTag::TruncSub:
      return match_substitution_wff(target.child(0), pattern.child(0), x, true, candidate) &&
             match_substitution_wff(target.child(1), pattern.child(1), x, true, candidate);
    case WffTag::Sup:
    case WffTag::Inf:
      if (target.bound_var() != pattern.bound_var()) return false;
      return match_substitution_wff(target.child(), pattern.child(), x,
                                    pattern.bound_var() != x, candidate);
    default:
      return false; // matcher runs on core syntax
  }
}

void match_xiv_xv(const Signature& sig, const Wff& w, std::vector<SchemaInstance>& out) {
  // both have the shape A ∸ (A ∸ B) with
  //   A = 2^{-Δ(F;n)}̲ ∸ d(x,y)
  //   B = d(f(..x..), f(..y..)) ∸ 2^{-n}̲       (XIV)
  //   B = (P(..x..) ∸ P(..y..)) ∸ 2^{-n}̲      (XV)
  if (!is_sub(w) || !is_sub(w.child(1))) return;
  const Wff& a1 = w.child(0);
  const Wff& a2 = w.child(1).child(0);
  const Wff& b = w.child(1).child(1);
  if (a1 != a2 || !is_sub(a1) || !is_sub(b)) return;
  auto k1 = as_pow2_numeral(a1.child(0));
  auto dxy = as_d_atom(a1.child(1));
  auto k2 = as_pow2_numeral(b.child(1));
  if (!k1 || !dxy || !k2) return;
  std::uint64_t x = dxy->first, y = dxy->second;

  auto try_tuples = [&](const std::vector<Term>& sx, const std::vector<Term>& sy,
                        unsigned symbol, bool is_fun) {
    if (sx.size() != sy.size()) return;
    // all positions equal except one carrying x on the left and y on the right
    std::optional<unsigned> split;
    if (x == y) {
      for (std::size_t i = 0; i < sx.size(); ++i) {
        if (sx[i] != sy[i]) return;
        if (!split && sx[i].tag() == TermTag::Var && sx[i].var_index() == x)
          split = static_cast<unsigned>(i);
      }
      if (!split) return;
    } else {
      for (std::size_t i = 0; i < sx.size(); ++i) {
        if (sx[i] == sy[i]) continue;
        if (split) return;
        if (sx[i].tag() != TermTag::Var || sx[i].var_index() != x) return;
        if (sy[i].tag() != TermTag::Var || sy[i].var_index() != y) return;
        split = static_cast<unsigned>(i);
      }
      if (!split) return;
    }
    std::uint64_t n = *k2;
    std::uint64_t expect =
        is_fun ? sig.function(symbol).modulus(n) : sig.predicate(symbol).modulus(n);
    if (expect != *k1) return;
    SchemaInstance inst;
    inst.id = is_fun ? SchemaId::XIV : SchemaId::XV;
    inst.symbol = symbol;
    inst.n = n;
    inst.split = *split;
    inst.vars = {x, y};
    for (std::size_t i = 0; i < sx.size(); ++i)
      if (i != *split) inst.terms.push_back(sx[i]);
    out.push_back(std::move(inst));
  };

  // XIV: b = d(f(..), f(..)) ∸ numeral
  if (b.child(0).tag() == WffTag::Atomic &&
      b.child(0).pred_id() == Signature::metric_symbol) {
    const auto& ts = b.child(0).terms();
    if (ts[0].tag() == TermTag::App && ts[1].tag() == TermTag::App &&
        ts[0].fun_id() == ts[1].fun_id())
      try_tuples(ts[0].args(), ts[1].args(), ts[0].fun_id(), true);
  }
  // XV: b = (P(..) ∸ P(..)) ∸ numeral
  if (is_sub(b.child(0))) {
    const Wff& p1 = b.child(0).child(0);
    const Wff& p2 = b.child(0).child(1);
    if (p1.tag() == WffTag::Atomic && p2.tag() == WffTag::Atomic &&
        p1.pred_id() == p2.pred_id())
      try_tuples(p1.terms(), p2.terms(), p1.pred_id(), false);
  }
}

} // namespace

std::vector<SchemaInstance> match_axiom(const Signature& sig, const Wff& input) {
  Wff w = expand_shorthand(input);
  std::vector<SchemaInstance> out;

  // I: (φ∸ψ)∸φ
  if (is_sub(w) && is_sub(w.child(0)) && w.child(0).child(0) == w.child(1))
    out.push_back({SchemaId::I, {w.child(0).child(0), w.child(0).child(1)}, {}, {}, 0, 0, 0});

  // II: ((θ∸φ)∸(θ∸ψ))∸(ψ∸φ)
  if (is_sub(w) && is_sub(w.child(0)) && is_sub(w.child(1)) &&
      is_sub(w.child(0).child(0)) && is_sub(w.child(0).child(1))) {
    const Wff& tp = w.child(0).child(0); // θ∸φ
    const Wff& ts = w.child(0).child(1); // θ∸ψ
    const Wff& pf = w.child(1);          // ψ∸φ
    if (tp.child(0) == ts.child(0) && tp.child(1) == pf.child(1) &&
        ts.child(1) == pf.child(0))
      out.push_back({SchemaId::II, {tp.child(1), ts.child(1), tp.child(0)}, {}, {}, 0, 0, 0});
  }

  // III: (φ∸(φ∸ψ))∸(ψ∸(ψ∸φ))
  if (is_sub(w) && is_sub(w.child(0)) && is_sub(w.child(1)) &&
      is_sub(w.child(0).child(1)) && is_sub(w.child(1).child(1))) {
    const Wff& l = w.child(0);
    const Wff& r = w.child(1);
    const Wff& phi = l.child(0);
    const Wff& psi = r.child(0);
    if (l.child(1).child(0) == phi && l.child(1).child(1) == psi &&
        r.child(1).child(0) == psi && r.child(1).child(1) == phi)
      out.push_back({SchemaId::III, {phi, psi}, {}, {}, 0, 0, 0});
  }

  // IV: (φ∸ψ)∸(¬φ∸¬φ)
  if (is_sub(w) && is_sub(w.child(0)) && is_sub(w.child(1)) &&
      is_neg(w.child(1).child(0)) && is_neg(w.child(1).child(1))) {
    const Wff& phi = w.child(0).child(0);
    const Wff& psi = w.child(0).child(1);
    const Wff& n1 = w.child(1).child(0).child();
    const Wff& n2 = w.child(1).child(1).child();
    if (n1 == phi && n2 == phi)
      out.push_back({SchemaId::IV, {phi, psi}, {}, {}, 0, 0, 0});
    if (n1 == psi && n2 == phi)
      out.push_back({SchemaId::IVPrime, {phi, psi}, {}, {}, 0, 0, 0});
  }

  // V: (sup_x ψ ∸ sup_x φ) ∸ sup_x(ψ∸φ)
  if (is_sub(w) && is_sub(w.child(0)) && is_sup(w.child(1)) &&
      is_sup(w.child(0).child(0)) && is_sup(w.child(0).child(1)) &&
      is_sub(w.child(1).child())) {
    std::uint64_t x = w.child(1).bound_var();
    const Wff& sp = w.child(0).child(0);
    const Wff& sf = w.child(0).child(1);
    const Wff& body = w.child(1).child();
    if (sp.bound_var() == x && sf.bound_var() == x && body.child(0) == sp.child() &&
        body.child(1) == sf.child())
      out.push_back({SchemaId::V, {sf.child(), sp.child()}, {x}, {}, 0, 0, 0});
  }

  // VI: φ[t/x] ∸ sup_x φ
  if (is_sub(w) && is_sup(w.child(1))) {
    std::uint64_t x = w.child(1).bound_var();
    const Wff& phi = w.child(1).child();
    std::optional<Term> candidate;
    if (match_substitution_wff(w.child(0), phi, x, true, candidate)) {
      Term t = candidate ? *candidate : term_var(x);
      SubstitutionResult sr = substitute(phi, t, x);
      if (sr.correct && sr.wff == w.child(0))
        out.push_back({SchemaId::VI, {phi}, {x}, {t}, 0, 0, 0});
    }
  }

  // VII: sup_x φ ∸ φ, x not free in φ
  if (is_sub(w) && is_sup(w.child(0))) {
    std::uint64_t x = w.child(0).bound_var();
    const Wff& phi = w.child(0).child();
    if (phi == w.child(1) && !free_in(phi, x))
      out.push_back({SchemaId::VII, {phi}, {x}, {}, 0, 0, 0});
  }

  // VIII: expanded inf_x φ ↔ ¬(sup_x ¬φ)
  if (is_neg(w) && is_sub(w.child()) && is_neg(w.child().child(0)) &&
      is_sub(w.child().child(0).child()) && is_sub(w.child().child(1))) {
    const Wff& ab = w.child().child(0).child(); // A∸B
    const Wff& ba = w.child().child(1);         // B∸A
    const Wff& a = ab.child(0);
    const Wff& b = ab.child(1);
    if (ba.child(0) == b && ba.child(1) == a && is_inf(a) && is_neg(b) &&
        is_sup(b.child()) && is_neg(b.child().child())) {
      std::uint64_t x = a.bound_var();
      if (b.child().bound_var() == x && b.child().child().child() == a.child())
        out.push_back({SchemaId::VIII, {a.child()}, {x}, {}, 0, 0, 0});
    }
  }

  // IX: ½φ ∸ (φ ∸ ½φ)
  if (is_sub(w) && is_half(w.child(0)) && is_sub(w.child(1)) &&
      is_half(w.child(1).child(1))) {
    const Wff& phi = w.child(0).child();
    if (w.child(1).child(0) == phi && w.child(1).child(1).child() == phi)
      out.push_back({SchemaId::IX, {phi}, {}, {}, 0, 0, 0});
  }

  // X: (φ ∸ ½φ) ∸ ½φ
  if (is_sub(w) && is_sub(w.child(0)) && is_half(w.child(1)) &&
      is_half(w.child(0).child(1))) {
    const Wff& phi = w.child(0).child(0);
    if (w.child(0).child(1).child() == phi && w.child(1).child() == phi)
      out.push_back({SchemaId::X, {phi}, {}, {}, 0, 0, 0});
  }

  // XI: d(x,x)
  if (auto x = as_d_atom_xx(w))
    out.push_back({SchemaId::XI, {}, {*x}, {}, 0, 0, 0});

  // XII: d(x,y) ∸ d(y,x)
  if (is_sub(w)) {
    auto l = as_d_atom(w.child(0));
    auto r = as_d_atom(w.child(1));
    if (l && r && l->first == r->second && l->second == r->first)
      out.push_back({SchemaId::XII, {}, {l->first, l->second}, {}, 0, 0, 0});
  }

  // XIII: (d(x,z) ∸ d(x,y)) ∸ d(y,z)
  if (is_sub(w) && is_sub(w.child(0))) {
    auto xz = as_d_atom(w.child(0).child(0));
    auto xy = as_d_atom(w.child(0).child(1));
    auto yz = as_d_atom(w.child(1));
    if (xz && xy && yz && xz->first == xy->first && xy->second == yz->first &&
        xz->second == yz->second)
      out.push_back({SchemaId::XIII, {}, {xz->first, xy->second, xz->second}, {}, 0, 0, 0});
  }

  match_xiv_xv(sig, w, out);
  return out;
}

// ---- proof checking ----

ProofVerdict check_proof(const Signature& sig, const std::vector<Wff>& premises,
                         const std::vector<ProofLine>& lines) {
  std::vector<Wff> proved;
  proved.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const ProofLine& ln = lines[i];
    Wff stated = expand_shorthand(ln.wff);
    switch (ln.kind) {
      case ProofLine::Kind::Axiom: {
        Wff built;
        try {
          built = instantiate_schema(sig, ln.axiom);
        } catch (const std::exception& e) {
          return {false, i, std::string("axiom witness rejected: ") + e.what()};
        }
        if (built != stated)
          return {false, i, "stated wff is not the instance the witness builds"};
        break;
      }
      case ProofLine::Kind::Premise: {
        if (ln.premise >= premises.size())
          return {false, i, "premise index out of range"};
        if (expand_shorthand(premises[ln.premise]) != stated)
          return {false, i, "stated wff differs from the cited premise"};
        break;
      }
      case ProofLine::Kind::ModusPonens: {
        if (ln.from_i >= i || ln.from_j >= i)
          return {false, i, "modus ponens cites a line that does not precede it"};
        const Wff& phi = proved[ln.from_i];
        const Wff& impl = proved[ln.from_j];
        if (impl != wff_truncsub(stated, phi))
          return {false, i, "cited lines do not justify modus ponens for the stated wff"};
        break;
      }
      case ProofLine::Kind::Generalization: {
        if (ln.from_i >= i)
          return {false, i, "generalization cites a line that does not precede it"};
        if (stated != wff_sup(ln.gen_var, proved[ln.from_i]))
          return {false, i, "stated wff is not the generalization of the cited line"};
        break;
      }
    }
    proved.push_back(stated);
  }
  return {true, 0, ""};
}

} // namespace contlog
