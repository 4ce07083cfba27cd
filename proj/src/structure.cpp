#include "contlog/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace contlog {

thread_local std::uint64_t EvalInstrumentation::structure_reads = 0;
thread_local std::uint64_t EvalInstrumentation::reads_inside_name = 0;
thread_local bool EvalInstrumentation::inside_name = false;

namespace {

void count_read() {
  ++EvalInstrumentation::structure_reads;
  if (EvalInstrumentation::inside_name) ++EvalInstrumentation::reads_inside_name;
}

std::size_t pow_size(unsigned base, unsigned expo) {
  std::size_t out = 1;
  for (unsigned i = 0; i < expo; ++i) out *= base;
  return out;
}

} // namespace

FiniteStructure::FiniteStructure(const Signature& sig, std::vector<std::string> element_names)
    : sig_(&sig), names_(std::move(element_names)) {
  if (names_.empty()) throw std::invalid_argument("empty universe");
  unsigned u = size();
  dist_.assign(static_cast<std::size_t>(u) * u, Rational(0));
  dist_set_.assign(static_cast<std::size_t>(u) * u, false);
  for (unsigned a = 0; a < u; ++a) dist_set_[static_cast<std::size_t>(a) * u + a] = true;
  pred_.resize(sig.predicate_count());
  pred_set_.resize(sig.predicate_count());
  for (unsigned p = 0; p < sig.predicate_count(); ++p) {
    if (p == Signature::metric_symbol) continue;
    std::size_t n = pow_size(u, sig.predicate(p).arity);
    pred_[p].assign(n, Rational(0));
    pred_set_[p].assign(n, false);
  }
  fun_.resize(sig.function_count());
  fun_set_.resize(sig.function_count());
  for (unsigned f = 0; f < sig.function_count(); ++f) {
    std::size_t n = pow_size(u, sig.function(f).arity);
    fun_[f].assign(n, 0);
    fun_set_[f].assign(n, false);
  }
  consts_.resize(sig.constant_count());
}

bool FiniteStructure::find_element(const std::string& name, unsigned& id) const {
  for (unsigned i = 0; i < names_.size(); ++i)
    if (names_[i] == name) { id = i; return true; }
  return false;
}

std::size_t FiniteStructure::tuple_index(unsigned arity, const std::vector<unsigned>& tuple) const {
  if (tuple.size() != arity) throw std::invalid_argument("tuple arity mismatch");
  std::size_t idx = 0;
  for (unsigned e : tuple) {
    if (e >= size()) throw std::out_of_range("element id out of range");
    idx = idx * size() + e;
  }
  return idx;
}

void FiniteStructure::set_distance(unsigned a, unsigned b, const Rational& r) {
  dist_[static_cast<std::size_t>(a) * size() + b] = r;
  dist_set_[static_cast<std::size_t>(a) * size() + b] = true;
}

void FiniteStructure::set_pred(unsigned pred, const std::vector<unsigned>& tuple, const Rational& v) {
  if (pred == Signature::metric_symbol) {
    set_distance(tuple.at(0), tuple.at(1), v);
    return;
  }
  std::size_t i = tuple_index(sig_->predicate(pred).arity, tuple);
  pred_[pred][i] = v;
  pred_set_[pred][i] = true;
}

void FiniteStructure::set_fun(unsigned fun, const std::vector<unsigned>& tuple, unsigned out) {
  if (out >= size()) throw std::out_of_range("function value out of range");
  std::size_t i = tuple_index(sig_->function(fun).arity, tuple);
  fun_[fun][i] = out;
  fun_set_[fun][i] = true;
}

void FiniteStructure::set_const(unsigned cid, unsigned elem) {
  if (elem >= size()) throw std::out_of_range("constant value out of range");
  consts_.at(cid) = elem;
}

bool FiniteStructure::distance_set(unsigned a, unsigned b) const {
  return dist_set_[static_cast<std::size_t>(a) * size() + b];
}

const Rational& FiniteStructure::distance(unsigned a, unsigned b) const {
  count_read();
  return dist_[static_cast<std::size_t>(a) * size() + b];
}

const Rational& FiniteStructure::pred_entry(unsigned pred, const std::vector<unsigned>& tuple) const {
  if (pred == Signature::metric_symbol) return distance(tuple.at(0), tuple.at(1));
  count_read();
  return pred_[pred][tuple_index(sig_->predicate(pred).arity, tuple)];
}

unsigned FiniteStructure::fun_entry(unsigned fun, const std::vector<unsigned>& tuple) const {
  count_read();
  return fun_[fun][tuple_index(sig_->function(fun).arity, tuple)];
}

unsigned FiniteStructure::const_entry(unsigned cid) const {
  count_read();
  if (!consts_.at(cid))
    throw std::invalid_argument("constant " + sig_->constant_name(cid) + " is uninterpreted");
  return *consts_[cid];
}

std::vector<std::string> FiniteStructure::missing_entries() const {
  std::vector<std::string> out;
  unsigned u = size();
  for (unsigned a = 0; a < u; ++a)
    for (unsigned b = 0; b < u; ++b)
      if (!dist_set_[static_cast<std::size_t>(a) * u + b] &&
          !dist_set_[static_cast<std::size_t>(b) * u + a])
        out.push_back("dist " + names_[a] + " " + names_[b]);
  for (unsigned p = 0; p < sig_->predicate_count(); ++p) {
    if (p == Signature::metric_symbol) continue;
    for (std::size_t i = 0; i < pred_set_[p].size(); ++i)
      if (!pred_set_[p][i]) {
        out.push_back("predval " + sig_->predicate(p).name + " (entry " + std::to_string(i) + ")");
      }
  }
  for (unsigned f = 0; f < sig_->function_count(); ++f)
    for (std::size_t i = 0; i < fun_set_[f].size(); ++i)
      if (!fun_set_[f][i])
        out.push_back("funval " + sig_->function(f).name + " (entry " + std::to_string(i) + ")");
  for (unsigned c = 0; c < consts_.size(); ++c)
    if (!consts_[c]) out.push_back("constval " + sig_->constant_name(c));
  return out;
}

// ---- validation ----

namespace {

struct TupleRange {
  unsigned universe;
  unsigned arity;

  std::vector<std::vector<unsigned>> all() const {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(arity, 0);
    while (true) {
      out.push_back(cur);
      unsigned i = arity;
      while (i > 0) {
        --i;
        if (++cur[i] < universe) break;
        cur[i] = 0;
        if (i == 0) return out;
      }
    }
  }
};

std::string tuple_str(const FiniteStructure& m, const std::vector<unsigned>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += m.element_name(t[i]);
  }
  return out + ")";
}

Rational tuple_distance(const FiniteStructure& m, const std::vector<unsigned>& a,
                        const std::vector<unsigned>& b) {
  Rational best(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational& d = m.distance(a[i], b[i]);
    if (d > best) best = d;
  }
  return best;
}

Rational abs_diff(const Rational& a, const Rational& b) {
  return a >= b ? Rational(a - b) : Rational(b - a);
}

} // namespace

ValidationReport validate_structure(const FiniteStructure& m) {
  ValidationReport rep;
  const Signature& sig = m.signature();
  unsigned u = m.size();

  for (const std::string& miss : m.missing_entries())
    rep.violations.push_back("missing entry: " + miss);
  if (!rep.ok()) return rep;

  for (unsigned a = 0; a < u; ++a)
    for (unsigned b = 0; b < u; ++b) {
      const Rational& d = m.distance(a, b);
      if (d < 0 || d > 1)
        rep.violations.push_back("diameter: d" + tuple_str(m, {a, b}) + " = " + d.get_str() +
                                 " outside [0,1]");
    }
  for (unsigned a = 0; a < u; ++a)
    if (m.distance(a, a) != 0)
      rep.violations.push_back("reflexivity: d(" + m.element_name(a) + "," + m.element_name(a) +
                               ") = " + m.distance(a, a).get_str());
  for (unsigned a = 0; a < u; ++a)
    for (unsigned b = a + 1; b < u; ++b)
      if (m.distance(a, b) != m.distance(b, a))
        rep.violations.push_back("symmetry: d" + tuple_str(m, {a, b}) + " != d" +
                                 tuple_str(m, {b, a}));
  for (unsigned x = 0; x < u; ++x)
    for (unsigned y = 0; y < u; ++y)
      for (unsigned z = 0; z < u; ++z)
        if (m.distance(x, z) > m.distance(x, y) + m.distance(y, z))
          rep.violations.push_back("triangle: d" + tuple_str(m, {x, z}) + " > d" +
                                   tuple_str(m, {x, y}) + " + d" + tuple_str(m, {y, z}));

  for (unsigned p = 0; p < sig.predicate_count(); ++p) {
    if (p == Signature::metric_symbol) continue;
    TupleRange r{u, sig.predicate(p).arity};
    for (const auto& t : r.all()) {
      const Rational& v = m.pred_entry(p, t);
      if (v < 0 || v > 1)
        rep.violations.push_back("range: " + sig.predicate(p).name + tuple_str(m, t) + " = " +
                                 v.get_str() + " outside [0,1]");
    }
  }
  if (!rep.ok()) return rep;

  // moduli: check every n until the hypothesis d < 2^{-Δ(n)} only admits
  // zero-distance tuples, then check the zero-distance congruence once
  Rational delta_min(0);
  bool any_positive = false;
  for (unsigned a = 0; a < u; ++a)
    for (unsigned b = 0; b < u; ++b) {
      const Rational& d = m.distance(a, b);
      if (d > 0 && (!any_positive || d < delta_min)) {
        delta_min = d;
        any_positive = true;
      }
    }

  auto check_symbol = [&](const std::string& name, unsigned arity, const Modulus& mod,
                          auto&& output_distance) {
    TupleRange r{u, arity};
    auto tuples = r.all();
    if (any_positive) {
      for (std::uint64_t n = 0;; ++n) {
        std::uint64_t dn = mod(n);
        if (dn > (1u << 20))
          throw std::length_error("modulus value too large to check: " + name);
        Rational tau = pow2_neg(dn);
        if (tau <= delta_min) break;
        Rational bound = pow2_neg(n);
        for (const auto& ta : tuples)
          for (const auto& tb : tuples) {
            if (tuple_distance(m, ta, tb) >= tau) continue;
            Rational out = output_distance(ta, tb);
            if (out > bound)
              rep.violations.push_back("modulus: " + name + " at n=" + std::to_string(n) +
                                       " tuples " + tuple_str(m, ta) + " " + tuple_str(m, tb));
          }
      }
    }
    for (const auto& ta : tuples)
      for (const auto& tb : tuples) {
        if (tuple_distance(m, ta, tb) != 0) continue;
        if (output_distance(ta, tb) != 0)
          rep.violations.push_back("modulus (zero-distance congruence): " + name + " tuples " +
                                   tuple_str(m, ta) + " " + tuple_str(m, tb));
      }
  };

  for (unsigned p = 0; p < sig.predicate_count(); ++p) {
    const PredicateSymbol& ps = sig.predicate(p);
    check_symbol(ps.name, ps.arity, ps.modulus, [&](const auto& ta, const auto& tb) {
      return abs_diff(m.pred_entry(p, ta), m.pred_entry(p, tb));
    });
  }
  for (unsigned f = 0; f < sig.function_count(); ++f) {
    const FunctionSymbol& fs = sig.function(f);
    check_symbol(fs.name, fs.arity, fs.modulus, [&](const auto& ta, const auto& tb) {
      return Rational(m.distance(m.fun_entry(f, ta), m.fun_entry(f, tb)));
    });
  }

  return rep;
}

// ---- evaluation ----

void HenkinValuation::set(const HenkinConstantPtr& c, unsigned elem) {
  for (auto& [k, v] : entries_)
    if (henkin_equal(*k, *c)) {
      v = elem;
      return;
    }
  entries_.emplace_back(c, elem);
}

std::optional<unsigned> HenkinValuation::get(const HenkinConstant& c) const {
  for (const auto& [k, v] : entries_)
    if (henkin_equal(*k, c)) return v;
  return std::nullopt;
}

unsigned eval_term(const FiniteStructure& m, const Assignment& sigma, const Term& t,
                   const HenkinValuation* hv) {
  switch (t.tag()) {
    case TermTag::Var:
      return sigma.get(t.var_index());
    case TermTag::Const:
      return m.const_entry(t.const_id());
    case TermTag::HenkinConst: {
      if (hv) {
        auto e = hv->get(*t.henkin());
        if (e) return *e;
      }
      throw std::invalid_argument("henkin constant has no interpretation in this structure");
    }
    case TermTag::App: {
      std::vector<unsigned> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(eval_term(m, sigma, a, hv));
      return m.fun_entry(t.fun_id(), args);
    }
  }
  throw std::logic_error("unreachable term tag");
}

Value eval_wff(const FiniteStructure& m, const Assignment& sigma, const Wff& w,
               const HenkinValuation* hv) {
  if (!w.is_core()) return eval_wff(m, sigma, expand_shorthand(w), hv);
  switch (w.tag()) {
    case WffTag::Atomic: {
      std::vector<unsigned> args;
      args.reserve(w.terms().size());
      for (const Term& t : w.terms()) args.push_back(eval_term(m, sigma, t, hv));
      return Value(m.pred_entry(w.pred_id(), args));
    }
    case WffTag::Neg:
      return value_neg(eval_wff(m, sigma, w.child(), hv));
    case WffTag::Half:
      return value_half(eval_wff(m, sigma, w.child(), hv));
    case WffTag::TruncSub:
      return value_truncsub(eval_wff(m, sigma, w.child(0), hv), eval_wff(m, sigma, w.child(1), hv));
    case WffTag::Sup: {
      Value best(Rational(0));
      for (unsigned e = 0; e < m.size(); ++e) {
        Value v = eval_wff(m, sigma.with(w.bound_var(), e), w.child(), hv);
        if (e == 0 || v > best) best = v;
      }
      return best;
    }
    case WffTag::Inf: {
      Value best(Rational(0));
      for (unsigned e = 0; e < m.size(); ++e) {
        Value v = eval_wff(m, sigma.with(w.bound_var(), e), w.child(), hv);
        if (e == 0 || v < best) best = v;
      }
      return best;
    }
    default:
      throw std::logic_error("shorthand survived expansion");
  }
}

Value sentence_value(const FiniteStructure& m, const Wff& sentence, const HenkinValuation* hv) {
  Wff core = expand_shorthand(sentence);
  if (!core.is_sentence())
    throw std::invalid_argument("not a sentence: free variables remain");
  Value v = eval_wff(m, Assignment(0), core, hv);
  if (m.size() > 1) {
    Value w = eval_wff(m, Assignment(m.size() - 1), core, hv);
    if (v != w) throw std::logic_error("sentence value depends on the assignment");
  }
  return v;
}

// ---- memoizing evaluator ----

std::size_t Evaluator::CacheKeyHash::operator()(const CacheKey& k) const {
  std::size_t h = std::hash<const void*>{}(k.node);
  for (unsigned v : k.vals) h ^= (h << 7) + v + 0x9e3779b9;
  return h;
}

namespace {

bool shallow_equal(const Wff& a, const Wff& b) {
  if (a.tag() != b.tag() || a.hash() != b.hash() || a.child_count() != b.child_count())
    return false;
  switch (a.tag()) {
    case WffTag::Atomic:
      if (a.pred_id() != b.pred_id() || a.terms().size() != b.terms().size()) return false;
      for (std::size_t i = 0; i < a.terms().size(); ++i)
        if (a.terms()[i] != b.terms()[i]) return false;
      break;
    case WffTag::Sup:
    case WffTag::Inf:
      if (a.bound_var() != b.bound_var()) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a.child_count(); ++i)
    if (a.child(i).node() != b.child(i).node()) return false;
  return true;
}

} // namespace

Wff Evaluator::intern(const Wff& w) {
  if (!w.is_core()) return intern(expand_shorthand(w));
  Wff rebuilt = w;
  if (w.child_count() > 0) {
    std::vector<Wff> kids;
    kids.reserve(w.child_count());
    bool changed = false;
    for (std::size_t i = 0; i < w.child_count(); ++i) {
      Wff k = intern(w.child(i));
      changed = changed || k.node() != w.child(i).node();
      kids.push_back(std::move(k));
    }
    if (changed) {
      switch (w.tag()) {
        case WffTag::Neg: rebuilt = wff_neg(kids[0]); break;
        case WffTag::Half: rebuilt = wff_half(kids[0]); break;
        case WffTag::TruncSub: rebuilt = wff_truncsub(kids[0], kids[1]); break;
        case WffTag::Sup: rebuilt = wff_sup(w.bound_var(), kids[0]); break;
        case WffTag::Inf: rebuilt = wff_inf(w.bound_var(), kids[0]); break;
        default: throw std::logic_error("unexpected interning tag");
      }
    }
  }
  auto range = interned_.equal_range(rebuilt.hash());
  for (auto it = range.first; it != range.second; ++it)
    if (shallow_equal(it->second, rebuilt)) return it->second;
  interned_.emplace(rebuilt.hash(), rebuilt);
  return rebuilt;
}

Value Evaluator::eval(const Wff& w, const Assignment& sigma) {
  return eval_impl(w, sigma);
}

Value Evaluator::eval_impl(const Wff& w, const Assignment& sigma) {
  constexpr std::size_t kCacheMinSize = 16;
  constexpr std::size_t kCacheMaxVars = 8;
  bool cache = w.size() >= kCacheMinSize && w.free_vars().size() <= kCacheMaxVars;
  CacheKey key;
  if (cache) {
    key.node = w.node().get();
    key.vals.reserve(w.free_vars().size());
    for (std::uint64_t v : w.free_vars()) key.vals.push_back(sigma.get(v));
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  Value out(Rational(0));
  switch (w.tag()) {
    case WffTag::Atomic: {
      std::vector<unsigned> args;
      args.reserve(w.terms().size());
      for (const Term& t : w.terms()) args.push_back(eval_term(*m_, sigma, t, nullptr));
      out = Value(m_->pred_entry(w.pred_id(), args));
      break;
    }
    case WffTag::Neg: out = value_neg(eval_impl(w.child(), sigma)); break;
    case WffTag::Half: out = value_half(eval_impl(w.child(), sigma)); break;
    case WffTag::TruncSub:
      out = value_truncsub(eval_impl(w.child(0), sigma), eval_impl(w.child(1), sigma));
      break;
    case WffTag::Sup: {
      for (unsigned e = 0; e < m_->size(); ++e) {
        Value v = eval_impl(w.child(), sigma.with(w.bound_var(), e));
        if (e == 0 || v > out) out = v;
      }
      break;
    }
    case WffTag::Inf: {
      for (unsigned e = 0; e < m_->size(); ++e) {
        Value v = eval_impl(w.child(), sigma.with(w.bound_var(), e));
        if (e == 0 || v < out) out = v;
      }
      break;
    }
    default:
      throw std::logic_error("shorthand reached the evaluator");
  }
  if (cache) cache_.emplace(std::move(key), out);
  return out;
}

} // namespace contlog
