#include "contlog/syntax.hpp"

#include <algorithm>
#include <stdexcept>

namespace contlog {

namespace {

std::size_t hash_mix(std::size_t h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::size_t hash_nat(const Nat& n) {
  return std::hash<std::string>{}(n.get_str(16));
}

std::vector<std::uint64_t> merge_sorted(const std::vector<std::uint64_t>& a,
                                        const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::uint64_t> remove_sorted(std::vector<std::uint64_t> v, std::uint64_t x) {
  v.erase(std::remove(v.begin(), v.end(), x), v.end());
  return v;
}

} // namespace

Dyad::Dyad(Nat n, std::uint64_t k) : num(std::move(n)), expo(k) {
  if (num < 0) throw std::domain_error("dyadic numeral with negative numerator");
  Nat den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), expo);
  if (num > den) throw std::domain_error("dyadic numeral with numerator above 2^k");
}

Value Dyad::value() const { return dyadic_value(num, expo); }

Dyad Dyad::reduced() const {
  Nat n = num;
  std::uint64_t k = expo;
  while (k > 0 && mpz_even_p(n.get_mpz_t())) {
    n /= 2;
    --k;
  }
  return Dyad(n, k);
}

struct TermNode {
  TermTag tag = TermTag::Var;
  std::uint64_t var = 0;
  unsigned sym = 0;
  HenkinConstantPtr hk;
  std::vector<Term> args;
  std::vector<std::uint64_t> fvs;
  bool henkin = false;
  std::size_t hash = 0;
  std::size_t size = 1;
};

struct WffNode {
  WffTag tag = WffTag::Atomic;
  unsigned pred = 0;
  std::vector<Term> terms;
  std::vector<Wff> children;
  std::uint64_t var = 0; // Sup/Inf bound var; Times scalar
  std::vector<std::uint64_t> vars;
  Dyad num;
  std::vector<std::uint64_t> fvs;
  bool henkin = false;
  bool core = true;
  std::size_t hash = 0;
  std::size_t size = 1;
};

// ---- Term accessors ----

TermTag Term::tag() const { return node_->tag; }
std::uint64_t Term::var_index() const { return node_->var; }
unsigned Term::const_id() const { return node_->sym; }
const HenkinConstantPtr& Term::henkin() const { return node_->hk; }
unsigned Term::fun_id() const { return node_->sym; }
const std::vector<Term>& Term::args() const { return node_->args; }
const std::vector<std::uint64_t>& Term::free_vars() const { return node_->fvs; }
bool Term::has_henkin() const { return node_->henkin; }
std::size_t Term::hash() const { return node_->hash; }
std::size_t Term::size() const { return node_->size; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const TermNode& x = *a.node_;
  const TermNode& y = *b.node_;
  if (x.tag != y.tag || x.hash != y.hash) return false;
  switch (x.tag) {
    case TermTag::Var: return x.var == y.var;
    case TermTag::Const: return x.sym == y.sym;
    case TermTag::HenkinConst: return henkin_equal(*x.hk, *y.hk);
    case TermTag::App:
      if (x.sym != y.sym || x.args.size() != y.args.size()) return false;
      for (std::size_t i = 0; i < x.args.size(); ++i)
        if (x.args[i] != y.args[i]) return false;
      return true;
  }
  return false;
}

Term term_var(std::uint64_t index) {
  auto n = std::make_shared<TermNode>();
  n->tag = TermTag::Var;
  n->var = index;
  n->fvs = {index};
  n->hash = hash_mix(1, std::hash<std::uint64_t>{}(index));
  return Term(std::move(n));
}

Term term_const(unsigned const_id) {
  auto n = std::make_shared<TermNode>();
  n->tag = TermTag::Const;
  n->sym = const_id;
  n->hash = hash_mix(2, const_id);
  return Term(std::move(n));
}

Term term_henkin(HenkinConstantPtr c) {
  auto n = std::make_shared<TermNode>();
  n->tag = TermTag::HenkinConst;
  n->hash = hash_mix(3, c->hash);
  n->henkin = true;
  n->size = 1 + c->phi.size();
  n->hk = std::move(c);
  return Term(std::move(n));
}

Term term_henkin(const Wff& phi, std::uint64_t var, const Dyad& p, const Dyad& q) {
  return term_henkin(make_henkin_constant(phi, var, p, q));
}

Term term_app(const Signature& sig, unsigned fun_id, std::vector<Term> args) {
  const FunctionSymbol& f = sig.function(fun_id);
  if (args.size() != f.arity)
    throw std::invalid_argument("arity mismatch applying " + f.name);
  auto n = std::make_shared<TermNode>();
  n->tag = TermTag::App;
  n->sym = fun_id;
  std::size_t h = hash_mix(4, fun_id);
  for (const Term& a : args) {
    n->fvs = merge_sorted(n->fvs, a.free_vars());
    n->henkin = n->henkin || a.has_henkin();
    n->size += a.size();
    h = hash_mix(h, a.hash());
  }
  n->hash = h;
  n->args = std::move(args);
  return Term(std::move(n));
}

// ---- Henkin constants ----

HenkinConstantPtr make_henkin_constant(const Wff& phi, std::uint64_t var,
                                       const Dyad& p, const Dyad& q) {
  auto c = std::make_shared<HenkinConstant>();
  c->phi = expand_shorthand(phi); // the identity is always core syntax
  c->var = var;
  c->p = p;
  c->q = q;
  std::size_t h = hash_mix(11, c->phi.hash());
  h = hash_mix(h, std::hash<std::uint64_t>{}(var));
  h = hash_mix(h, hash_nat(p.num));
  h = hash_mix(h, p.expo);
  h = hash_mix(h, hash_nat(q.num));
  h = hash_mix(h, q.expo);
  c->hash = h;
  return c;
}

bool henkin_equal(const HenkinConstant& a, const HenkinConstant& b) {
  return a.hash == b.hash && a.var == b.var && a.p == b.p && a.q == b.q &&
         a.phi == b.phi;
}

unsigned HenkinConstant::layer() const {
  unsigned deepest = 0;
  // layer = 1 + max layer of Henkin constants inside phi
  for (const auto& c : collect_henkin_constants(phi))
    deepest = std::max(deepest, c->layer());
  return deepest + 1;
}

// ---- Wff accessors ----

WffTag Wff::tag() const { return node_->tag; }
unsigned Wff::pred_id() const { return node_->pred; }
const std::vector<Term>& Wff::terms() const { return node_->terms; }
const Wff& Wff::child(std::size_t i) const { return node_->children[i]; }
std::size_t Wff::child_count() const { return node_->children.size(); }
std::uint64_t Wff::bound_var() const { return node_->var; }
const std::vector<std::uint64_t>& Wff::bound_vars() const { return node_->vars; }
std::uint64_t Wff::scalar() const { return node_->var; }
const Dyad& Wff::numeral() const { return node_->num; }
const std::vector<std::uint64_t>& Wff::free_vars() const { return node_->fvs; }
bool Wff::has_henkin() const { return node_->henkin; }
bool Wff::is_core() const { return node_->core; }
std::size_t Wff::hash() const { return node_->hash; }
std::size_t Wff::size() const { return node_->size; }

bool is_core_tag(WffTag t) {
  switch (t) {
    case WffTag::Atomic:
    case WffTag::Neg:
    case WffTag::Half:
    case WffTag::TruncSub:
    case WffTag::Sup:
    case WffTag::Inf:
      return true;
    default:
      return false;
  }
}

bool operator==(const Wff& a, const Wff& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const WffNode& x = *a.node_;
  const WffNode& y = *b.node_;
  if (x.tag != y.tag || x.hash != y.hash || x.size != y.size) return false;
  switch (x.tag) {
    case WffTag::Atomic:
      if (x.pred != y.pred || x.terms.size() != y.terms.size()) return false;
      for (std::size_t i = 0; i < x.terms.size(); ++i)
        if (x.terms[i] != y.terms[i]) return false;
      return true;
    case WffTag::Sup:
    case WffTag::Inf:
      if (x.var != y.var) return false;
      break;
    case WffTag::Times:
      if (x.var != y.var) return false;
      break;
    case WffTag::NumLit:
      return x.num == y.num;
    case WffTag::SupVec:
    case WffTag::InfVec:
      if (x.vars != y.vars) return false;
      break;
    default:
      break;
  }
  if (x.children.size() != y.children.size()) return false;
  for (std::size_t i = 0; i < x.children.size(); ++i)
    if (x.children[i] != y.children[i]) return false;
  return true;
}

namespace {

Wff finish(std::shared_ptr<WffNode> n, std::size_t seed) {
  std::size_t h = hash_mix(seed, static_cast<std::size_t>(n->tag));
  for (const Wff& c : n->children) {
    h = hash_mix(h, c.hash());
    n->size += c.size();
    n->henkin = n->henkin || c.has_henkin();
    n->core = n->core && c.is_core();
  }
  n->core = n->core && is_core_tag(n->tag);
  n->hash = h;
  return Wff(std::move(n));
}

Wff make_atomic_unchecked(unsigned pred_id, std::vector<Term> terms) {
  auto n = std::make_shared<WffNode>();
  n->tag = WffTag::Atomic;
  n->pred = pred_id;
  std::size_t h = hash_mix(21, pred_id);
  for (const Term& t : terms) {
    n->fvs = merge_sorted(n->fvs, t.free_vars());
    n->henkin = n->henkin || t.has_henkin();
    n->size += t.size();
    h = hash_mix(h, t.hash());
  }
  n->hash = h;
  n->terms = std::move(terms);
  return Wff(std::move(n));
}

Wff make_unary(WffTag tag, const Wff& w, std::size_t seed) {
  auto n = std::make_shared<WffNode>();
  n->tag = tag;
  n->children = {w};
  n->fvs = w.free_vars();
  return finish(std::move(n), seed);
}

} // namespace

Wff wff_atomic(const Signature& sig, unsigned pred_id, std::vector<Term> terms) {
  const PredicateSymbol& p = sig.predicate(pred_id);
  if (terms.size() != p.arity)
    throw std::invalid_argument("arity mismatch applying predicate " + p.name);
  return make_atomic_unchecked(pred_id, std::move(terms));
}

Wff wff_neg(const Wff& w) { return make_unary(WffTag::Neg, w, 22); }
Wff wff_half(const Wff& w) { return make_unary(WffTag::Half, w, 23); }

Wff wff_truncsub(const Wff& a, const Wff& b) {
  auto n = std::make_shared<WffNode>();
  n->tag = WffTag::TruncSub;
  n->children = {a, b};
  n->fvs = merge_sorted(a.free_vars(), b.free_vars());
  return finish(std::move(n), 24);
}

Wff wff_sup(std::uint64_t var, const Wff& w) {
  auto n = std::make_shared<WffNode>();
  n->tag = WffTag::Sup;
  n->var = var;
  n->children = {w};
  n->fvs = remove_sorted(w.free_vars(), var);
  return finish(std::move(n), hash_mix(25, std::hash<std::uint64_t>{}(var)));
}

Wff wff_inf(std::uint64_t var, const Wff& w) {
  auto n = std::make_shared<WffNode>();
  n->tag = WffTag::Inf;
  n->var = var;
  n->children = {w};
  n->fvs = remove_sorted(w.free_vars(), var);
  return finish(std::move(n), hash_mix(26, std::hash<std::uint64_t>{}(var)));
}

namespace {
Wff make_binary_sugar(WffTag tag, const Wff& a, const Wff& b, std::size_t seed) {
  auto n = std::make_shared<WffNode>();
  n->tag = tag;
  n->children = {a, b};
  n->fvs = merge_sorted(a.free_vars(), b.free_vars());
  return finish(std::move(n), seed);
}
} // namespace

Wff wff_or(const Wff& a, const Wff& b) { return make_binary_sugar(WffTag::Or, a, b, 31); }
Wff wff_and(const Wff& a, const Wff& b) { return make_binary_sugar(WffTag::And, a, b, 32); }
Wff wff_iff(const Wff& a, const Wff& b) { return make_binary_sugar(WffTag::Iff, a, b, 33); }
Wff wff_plus(const Wff& a, const Wff& b) { return make_binary_sugar(WffTag::Plus, a, b, 34); }

Wff wff_times(std::uint64_t m, const Wff& w) {
  auto n = std::make_shared<WffNode>();
  n->tag = WffTag::Times;
  n->var = m;
  n->children = {w};
  // 0·φ collapses to 0̲, so it binds nothing
  n->fvs = (m == 0) ? std::vector<std::uint64_t>{} : w.free_vars();
  return finish(std::move(n), hash_mix(35, m));
}

Wff wff_num(const Dyad& d) {
  auto n = std::make_shared<WffNode>();
  n->tag = WffTag::NumLit;
  n->num = d;
  std::size_t h = hash_mix(36, hash_nat(d.num));
  return finish(std::move(n), hash_mix(h, d.expo));
}

Wff wff_num(Nat num, std::uint64_t expo) { return wff_num(Dyad(std::move(num), expo)); }

Wff wff_sup_vec(std::vector<std::uint64_t> vars, const Wff& w) {
  auto n = std::make_shared<WffNode>();
  n->tag = WffTag::SupVec;
  n->children = {w};
  n->fvs = w.free_vars();
  for (std::uint64_t v : vars) n->fvs = remove_sorted(n->fvs, v);
  std::size_t h = 37;
  for (std::uint64_t v : vars) h = hash_mix(h, std::hash<std::uint64_t>{}(v));
  n->vars = std::move(vars);
  return finish(std::move(n), h);
}

Wff wff_inf_vec(std::vector<std::uint64_t> vars, const Wff& w) {
  auto n = std::make_shared<WffNode>();
  n->tag = WffTag::InfVec;
  n->children = {w};
  n->fvs = w.free_vars();
  for (std::uint64_t v : vars) n->fvs = remove_sorted(n->fvs, v);
  std::size_t h = 38;
  for (std::uint64_t v : vars) h = hash_mix(h, std::hash<std::uint64_t>{}(v));
  n->vars = std::move(vars);
  return finish(std::move(n), h);
}

Wff wff_zero() {
  static const Wff zero = wff_sup(0, make_atomic_unchecked(Signature::metric_symbol,
                                                           {term_var(0), term_var(0)}));
  return zero;
}

Wff wff_one() {
  static const Wff one = wff_neg(wff_zero());
  return one;
}

Wff wff_pow2neg(std::uint64_t k) {
  Wff w = wff_one();
  for (std::uint64_t i = 0; i < k; ++i) w = wff_half(w);
  return w;
}

// ---- shorthand expansion ----

namespace {

Wff plus_core(const Wff& a, const Wff& b) {
  return wff_neg(wff_truncsub(wff_truncsub(wff_one(), a), b));
}

} // namespace

Wff expand_shorthand(const Wff& w) {
  if (w.is_core()) return w;
  switch (w.tag()) {
    case WffTag::Atomic:
      return w; // terms are core by construction
    case WffTag::Neg: return wff_neg(expand_shorthand(w.child()));
    case WffTag::Half: return wff_half(expand_shorthand(w.child()));
    case WffTag::TruncSub:
      return wff_truncsub(expand_shorthand(w.child(0)), expand_shorthand(w.child(1)));
    case WffTag::Sup: return wff_sup(w.bound_var(), expand_shorthand(w.child()));
    case WffTag::Inf: return wff_inf(w.bound_var(), expand_shorthand(w.child()));
    case WffTag::Or: {
      Wff a = expand_shorthand(w.child(0)), b = expand_shorthand(w.child(1));
      return wff_neg(wff_truncsub(wff_neg(a), b));
    }
    case WffTag::And: {
      Wff a = expand_shorthand(w.child(0)), b = expand_shorthand(w.child(1));
      return wff_truncsub(a, wff_truncsub(a, b));
    }
    case WffTag::Iff: {
      Wff a = expand_shorthand(w.child(0)), b = expand_shorthand(w.child(1));
      Wff ab = wff_truncsub(a, b), ba = wff_truncsub(b, a);
      return wff_neg(wff_truncsub(wff_neg(ab), ba));
    }
    case WffTag::Plus:
      return plus_core(expand_shorthand(w.child(0)), expand_shorthand(w.child(1)));
    case WffTag::Times: {
      std::uint64_t m = w.scalar();
      if (m == 0) return wff_zero();
      Wff a = expand_shorthand(w.child());
      Wff acc = a;
      for (std::uint64_t i = 1; i < m; ++i) acc = plus_core(acc, a);
      return acc;
    }
    case WffTag::NumLit: {
      const Dyad& d = w.numeral();
      if (d.num == 0) return wff_zero();
      Wff base = wff_pow2neg(d.expo);
      Wff acc = base;
      for (Nat i = 1; i < d.num; ++i) acc = plus_core(acc, base);
      return acc;
    }
    case WffTag::SupVec: {
      Wff acc = expand_shorthand(w.child());
      const auto& vs = w.bound_vars();
      for (auto it = vs.rbegin(); it != vs.rend(); ++it) acc = wff_sup(*it, acc);
      return acc;
    }
    case WffTag::InfVec: {
      Wff acc = expand_shorthand(w.child());
      const auto& vs = w.bound_vars();
      for (auto it = vs.rbegin(); it != vs.rend(); ++it) acc = wff_inf(*it, acc);
      return acc;
    }
  }
  throw std::logic_error("unreachable wff tag");
}

// ---- substitution ----

namespace {

bool contains_var(const std::vector<std::uint64_t>& sorted, std::uint64_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

Term substitute_term(const Term& t, const Term& repl, std::uint64_t x) {
  if (!contains_var(t.free_vars(), x)) return t;
  switch (t.tag()) {
    case TermTag::Var:
      return t.var_index() == x ? repl : t;
    case TermTag::Const:
    case TermTag::HenkinConst:
      return t;
    case TermTag::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(substitute_term(a, repl, x));
      // arity unchanged; rebuild without re-checking
      auto n = std::make_shared<TermNode>();
      n->tag = TermTag::App;
      n->sym = t.fun_id();
      std::size_t h = hash_mix(4, t.fun_id());
      for (const Term& a : args) {
        n->fvs = merge_sorted(n->fvs, a.free_vars());
        n->henkin = n->henkin || a.has_henkin();
        n->size += a.size();
        h = hash_mix(h, a.hash());
      }
      n->hash = h;
      n->args = std::move(args);
      return Term(std::move(n));
    }
  }
  throw std::logic_error("unreachable term tag");
}

Wff substitute_impl(const Wff& w, const Term& t, std::uint64_t x, bool& ok) {
  if (!contains_var(w.free_vars(), x)) return w;
  switch (w.tag()) {
    case WffTag::Atomic: {
      std::vector<Term> ts;
      ts.reserve(w.terms().size());
      for (const Term& a : w.terms()) ts.push_back(substitute_term(a, t, x));
      return make_atomic_unchecked(w.pred_id(), std::move(ts));
    }
    case WffTag::Neg: return wff_neg(substitute_impl(w.child(), t, x, ok));
    case WffTag::Half: return wff_half(substitute_impl(w.child(), t, x, ok));
    case WffTag::TruncSub:
      return wff_truncsub(substitute_impl(w.child(0), t, x, ok),
                          substitute_impl(w.child(1), t, x, ok));
    case WffTag::Sup:
    case WffTag::Inf: {
      std::uint64_t v = w.bound_var();
      // x is free below here (checked above), so v != x
      if (contains_var(t.free_vars(), v)) {
        ok = false;
        return w;
      }
      Wff body = substitute_impl(w.child(), t, x, ok);
      return w.tag() == WffTag::Sup ? wff_sup(v, body) : wff_inf(v, body);
    }
    case WffTag::Or:
      return wff_or(substitute_impl(w.child(0), t, x, ok), substitute_impl(w.child(1), t, x, ok));
    case WffTag::And:
      return wff_and(substitute_impl(w.child(0), t, x, ok), substitute_impl(w.child(1), t, x, ok));
    case WffTag::Iff:
      return wff_iff(substitute_impl(w.child(0), t, x, ok), substitute_impl(w.child(1), t, x, ok));
    case WffTag::Plus:
      return wff_plus(substitute_impl(w.child(0), t, x, ok), substitute_impl(w.child(1), t, x, ok));
    case WffTag::Times:
      return wff_times(w.scalar(), substitute_impl(w.child(), t, x, ok));
    case WffTag::NumLit:
      return w;
    case WffTag::SupVec:
    case WffTag::InfVec: {
      const auto& vs = w.bound_vars();
      for (std::uint64_t v : vs) {
        if (v == x) return w; // shadowed; but x was free, so only possible with repeats
        if (contains_var(t.free_vars(), v)) {
          ok = false;
          return w;
        }
      }
      Wff body = substitute_impl(w.child(), t, x, ok);
      return w.tag() == WffTag::SupVec ? wff_sup_vec(vs, body) : wff_inf_vec(vs, body);
    }
  }
  throw std::logic_error("unreachable wff tag");
}

} // namespace

SubstitutionResult substitute(const Wff& w, const Term& t, std::uint64_t x) {
  bool ok = true;
  Wff out = substitute_impl(w, t, x, ok);
  if (!ok) return {w, false};
  return {out, true};
}

// ---- variable and Henkin-constant walks ----

namespace {

void occurring_vars_term(const Term& t, std::vector<std::uint64_t>& acc) {
  switch (t.tag()) {
    case TermTag::Var: acc.push_back(t.var_index()); return;
    case TermTag::Const:
    case TermTag::HenkinConst: return;
    case TermTag::App:
      for (const Term& a : t.args()) occurring_vars_term(a, acc);
      return;
  }
}

void occurring_vars_impl(const Wff& w, std::vector<std::uint64_t>& acc) {
  switch (w.tag()) {
    case WffTag::Atomic:
      for (const Term& t : w.terms()) occurring_vars_term(t, acc);
      return;
    case WffTag::Sup:
    case WffTag::Inf:
      acc.push_back(w.bound_var());
      break;
    case WffTag::SupVec:
    case WffTag::InfVec:
      for (std::uint64_t v : w.bound_vars()) acc.push_back(v);
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < w.child_count(); ++i) occurring_vars_impl(w.child(i), acc);
}

} // namespace

std::vector<std::uint64_t> occurring_vars(const Wff& w) {
  std::vector<std::uint64_t> acc;
  occurring_vars_impl(w, acc);
  std::sort(acc.begin(), acc.end());
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  return acc;
}

Wff sup_close(const Wff& w) {
  std::vector<std::uint64_t> fvs = w.free_vars();
  Wff out = w;
  for (auto it = fvs.rbegin(); it != fvs.rend(); ++it) out = wff_sup(*it, out);
  return out;
}

namespace {

void collect_henkin_term(const Term& t, std::vector<HenkinConstantPtr>& acc) {
  if (!t.has_henkin()) return;
  switch (t.tag()) {
    case TermTag::HenkinConst: {
      for (const auto& c : acc)
        if (henkin_equal(*c, *t.henkin())) return;
      acc.push_back(t.henkin());
      return;
    }
    case TermTag::App:
      for (const Term& a : t.args()) collect_henkin_term(a, acc);
      return;
    default:
      return;
  }
}

void collect_henkin_impl(const Wff& w, std::vector<HenkinConstantPtr>& acc) {
  if (!w.has_henkin()) return;
  if (w.tag() == WffTag::Atomic) {
    for (const Term& t : w.terms()) collect_henkin_term(t, acc);
    return;
  }
  for (std::size_t i = 0; i < w.child_count(); ++i) collect_henkin_impl(w.child(i), acc);
}

Term replace_henkin_term(const Term& t, const HenkinConstantPtr& c, const Term& repl) {
  if (!t.has_henkin()) return t;
  switch (t.tag()) {
    case TermTag::HenkinConst:
      return henkin_equal(*t.henkin(), *c) ? repl : t;
    case TermTag::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(replace_henkin_term(a, c, repl));
      auto n = std::make_shared<TermNode>();
      n->tag = TermTag::App;
      n->sym = t.fun_id();
      std::size_t h = hash_mix(4, t.fun_id());
      for (const Term& a : args) {
        n->fvs = merge_sorted(n->fvs, a.free_vars());
        n->henkin = n->henkin || a.has_henkin();
        n->size += a.size();
        h = hash_mix(h, a.hash());
      }
      n->hash = h;
      n->args = std::move(args);
      return Term(std::move(n));
    }
    default:
      return t;
  }
}

} // namespace

std::vector<HenkinConstantPtr> collect_henkin_constants(const Wff& w) {
  std::vector<HenkinConstantPtr> acc;
  collect_henkin_impl(w, acc);
  return acc;
}

Wff replace_henkin_constant(const Wff& w, const HenkinConstantPtr& c, const Term& t) {
  if (!w.has_henkin()) return w;
  switch (w.tag()) {
    case WffTag::Atomic: {
      std::vector<Term> ts;
      ts.reserve(w.terms().size());
      for (const Term& a : w.terms()) ts.push_back(replace_henkin_term(a, c, t));
      return make_atomic_unchecked(w.pred_id(), std::move(ts));
    }
    case WffTag::Neg: return wff_neg(replace_henkin_constant(w.child(), c, t));
    case WffTag::Half: return wff_half(replace_henkin_constant(w.child(), c, t));
    case WffTag::TruncSub:
      return wff_truncsub(replace_henkin_constant(w.child(0), c, t),
                          replace_henkin_constant(w.child(1), c, t));
    case WffTag::Sup: return wff_sup(w.bound_var(), replace_henkin_constant(w.child(), c, t));
    case WffTag::Inf: return wff_inf(w.bound_var(), replace_henkin_constant(w.child(), c, t));
    case WffTag::Or:
      return wff_or(replace_henkin_constant(w.child(0), c, t),
                    replace_henkin_constant(w.child(1), c, t));
    case WffTag::And:
      return wff_and(replace_henkin_constant(w.child(0), c, t),
                     replace_henkin_constant(w.child(1), c, t));
    case WffTag::Iff:
      return wff_iff(replace_henkin_constant(w.child(0), c, t),
                     replace_henkin_constant(w.child(1), c, t));
    case WffTag::Plus:
      return wff_plus(replace_henkin_constant(w.child(0), c, t),
                      replace_henkin_constant(w.child(1), c, t));
    case WffTag::Times:
      return wff_times(w.scalar(), replace_henkin_constant(w.child(), c, t));
    case WffTag::NumLit:
      return w;
    case WffTag::SupVec:
      return wff_sup_vec(w.bound_vars(), replace_henkin_constant(w.child(), c, t));
    case WffTag::InfVec:
      return wff_inf_vec(w.bound_vars(), replace_henkin_constant(w.child(), c, t));
  }
  throw std::logic_error("unreachable wff tag");
}

// ---- printing ----

std::string print_term(const Term& t, const Signature& sig) {
  switch (t.tag()) {
    case TermTag::Var:
      return "(var " + std::to_string(t.var_index()) + ")";
    case TermTag::Const:
      return "(const " + sig.constant_name(t.const_id()) + ")";
    case TermTag::HenkinConst: {
      const HenkinConstant& c = *t.henkin();
      return "(henkin " + print_wff(c.phi, sig) + " " + std::to_string(c.var) +
             " (num " + c.p.num.get_str() + " " + std::to_string(c.p.expo) + ")" +
             " (num " + c.q.num.get_str() + " " + std::to_string(c.q.expo) + "))";
    }
    case TermTag::App: {
      std::string out = "(app " + sig.function(t.fun_id()).name;
      for (const Term& a : t.args()) out += " " + print_term(a, sig);
      return out + ")";
    }
  }
  throw std::logic_error("unreachable term tag");
}

std::string print_wff(const Wff& w, const Signature& sig) {
  switch (w.tag()) {
    case WffTag::Atomic: {
      std::string out = "(pred " + sig.predicate(w.pred_id()).name;
      for (const Term& t : w.terms()) out += " " + print_term(t, sig);
      return out + ")";
    }
    case WffTag::Neg: return "(neg " + print_wff(w.child(), sig) + ")";
    case WffTag::Half: return "(half " + print_wff(w.child(), sig) + ")";
    case WffTag::TruncSub:
      return "(sub " + print_wff(w.child(0), sig) + " " + print_wff(w.child(1), sig) + ")";
    case WffTag::Sup:
      return "(sup " + std::to_string(w.bound_var()) + " " + print_wff(w.child(), sig) + ")";
    case WffTag::Inf:
      return "(inf " + std::to_string(w.bound_var()) + " " + print_wff(w.child(), sig) + ")";
    case WffTag::Or:
      return "(or " + print_wff(w.child(0), sig) + " " + print_wff(w.child(1), sig) + ")";
    case WffTag::And:
      return "(and " + print_wff(w.child(0), sig) + " " + print_wff(w.child(1), sig) + ")";
    case WffTag::Iff:
      return "(iff " + print_wff(w.child(0), sig) + " " + print_wff(w.child(1), sig) + ")";
    case WffTag::Plus:
      return "(plus " + print_wff(w.child(0), sig) + " " + print_wff(w.child(1), sig) + ")";
    case WffTag::Times:
      return "(times " + std::to_string(w.scalar()) + " " + print_wff(w.child(), sig) + ")";
    case WffTag::NumLit:
      return "(num " + w.numeral().num.get_str() + " " + std::to_string(w.numeral().expo) + ")";
    case WffTag::SupVec: {
      // printed as the nested singles it expands to
      std::string out;
      const auto& vs = w.bound_vars();
      for (std::uint64_t v : vs) out += "(sup " + std::to_string(v) + " ";
      out += print_wff(w.child(), sig);
      out.append(vs.size(), ')');
      return out;
    }
    case WffTag::InfVec: {
      std::string out;
      const auto& vs = w.bound_vars();
      for (std::uint64_t v : vs) out += "(inf " + std::to_string(v) + " ";
      out += print_wff(w.child(), sig);
      out.append(vs.size(), ')');
      return out;
    }
  }
  throw std::logic_error("unreachable wff tag");
}

} // namespace contlog
