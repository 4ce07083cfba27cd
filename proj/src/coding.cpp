#include "contlog/coding.hpp"

#include <optional>
#include <stdexcept>

namespace contlog {

namespace {

constexpr std::uint64_t kMaxPayloadBits = 1u << 22;

// ---- bit tape ----

struct TapeReader {
  const Nat& n;
  mp_bitcnt_t cursor = 0;

  bool read_bit() {
    bool b = mpz_tstbit(n.get_mpz_t(), cursor) != 0;
    ++cursor;
    return b;
  }

  Nat read_bits(std::uint64_t count) {
    if (count > kMaxPayloadBits)
      throw std::length_error("payload exceeds the representable coding range");
    Nat shifted;
    mpz_fdiv_q_2exp(shifted.get_mpz_t(), n.get_mpz_t(), cursor);
    Nat mask = 1;
    mpz_mul_2exp(mask.get_mpz_t(), mask.get_mpz_t(), count);
    mask -= 1;
    cursor += count;
    return shifted & mask;
  }

  Nat read_rest() {
    Nat shifted;
    mpz_fdiv_q_2exp(shifted.get_mpz_t(), n.get_mpz_t(), cursor);
    cursor = mpz_sizeinbase(n.get_mpz_t(), 2) + 1;
    return shifted;
  }
};

struct TapeWriter {
  std::vector<bool> bits;

  void write_bit(bool b) { bits.push_back(b); }

  void write_bits(const Nat& v, std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i)
      bits.push_back(mpz_tstbit(v.get_mpz_t(), i) != 0);
  }

  void write_rest(const Nat& v) {
    std::size_t top = mpz_sizeinbase(v.get_mpz_t(), 2);
    if (v == 0) return;
    write_bits(v, top);
  }

  Nat finish() const {
    Nat out = 0;
    for (std::size_t i = bits.size(); i-- > 0;)
      if (bits[i]) mpz_setbit(out.get_mpz_t(), i);
    return out;
  }
};

// ---- complete prefix codes ----

// Canonical complete binary code with k leaves: 2^ceil(lg k) - k codewords one
// bit shorter than the rest.
struct FiniteCode {
  unsigned k;
  unsigned dmax = 0;
  unsigned shallow = 0;

  explicit FiniteCode(unsigned count) : k(count) {
    while ((1u << dmax) < k) ++dmax;
    shallow = (1u << dmax) - k;
  }

  unsigned read(TapeReader& t) const {
    if (k == 1) return 0;
    unsigned v = 0;
    for (unsigned i = 0; i + 1 < dmax; ++i) v = (v << 1) | (t.read_bit() ? 1 : 0);
    if (v < shallow) return v;
    v = (v << 1) | (t.read_bit() ? 1 : 0);
    return v - shallow;
  }

  void write(TapeWriter& t, unsigned tag) const {
    if (k == 1) return;
    if (tag < shallow) {
      for (unsigned i = dmax - 1; i-- > 0;)
        t.write_bit(((tag >> i) & 1) != 0);
    } else {
      unsigned v = tag + shallow;
      for (unsigned i = dmax; i-- > 0;)
        t.write_bit(((v >> i) & 1) != 0);
    }
  }
};

// Unary-prefixed code for naturals (complete): a run of c ones, a zero, then
// c value bits; value = 2^c - 1 + v.
Nat read_gamma(TapeReader& t) {
  std::uint64_t c = 0;
  while (t.read_bit()) {
    if (++c > kMaxPayloadBits)
      throw std::length_error("payload exceeds the representable coding range");
  }
  Nat v = t.read_bits(c);
  Nat base = 1;
  mpz_mul_2exp(base.get_mpz_t(), base.get_mpz_t(), c);
  return base - 1 + v;
}

void write_gamma(TapeWriter& t, const Nat& p) {
  Nat p1 = p + 1;
  std::uint64_t c = mpz_sizeinbase(p1.get_mpz_t(), 2) - 1;
  for (std::uint64_t i = 0; i < c; ++i) t.write_bit(true);
  t.write_bit(false);
  Nat base = 1;
  mpz_mul_2exp(base.get_mpz_t(), base.get_mpz_t(), c);
  t.write_bits(p1 - base, c);
}

// Same shape with the length field gamma-coded; linear up to log factors.
Nat read_delta(TapeReader& t) {
  Nat cn = read_gamma(t);
  if (!cn.fits_ulong_p() || cn.get_ui() > kMaxPayloadBits)
    throw std::length_error("payload exceeds the representable coding range");
  std::uint64_t c = cn.get_ui();
  Nat v = t.read_bits(c);
  Nat base = 1;
  mpz_mul_2exp(base.get_mpz_t(), base.get_mpz_t(), c);
  return base - 1 + v;
}

void write_delta(TapeWriter& t, const Nat& p) {
  Nat p1 = p + 1;
  std::uint64_t c = mpz_sizeinbase(p1.get_mpz_t(), 2) - 1;
  write_gamma(t, Nat(static_cast<unsigned long>(c)));
  Nat base = 1;
  mpz_mul_2exp(base.get_mpz_t(), base.get_mpz_t(), c);
  t.write_bits(p1 - base, c);
}

std::uint64_t to_u64(const Nat& n, const char* what) {
  if (!n.fits_ulong_p()) throw std::length_error(std::string(what) + " exceeds the representable range");
  return n.get_ui();
}

} // namespace

// ---- dyadic numeral indexing ----

Nat dyad_to_index(const Dyad& d) {
  // index = sum_{j<k} (2^j + 1) + l = 2^k - 1 + k + l
  Nat base = 1;
  mpz_mul_2exp(base.get_mpz_t(), base.get_mpz_t(), d.expo);
  return base - 1 + Nat(static_cast<unsigned long>(d.expo)) + d.num;
}

Dyad dyad_from_index(const Nat& i) {
  std::uint64_t k = 0;
  Nat cum = 2; // 2^{k+1} + k at k = 0
  while (cum <= i) {
    ++k;
    if (k > kMaxPayloadBits) throw std::length_error("dyadic exponent exceeds the representable range");
    Nat p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), k + 1);
    cum = p + Nat(static_cast<unsigned long>(k));
  }
  Nat prev = 0;
  if (k > 0) {
    Nat p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), k);
    prev = p + Nat(static_cast<unsigned long>(k - 1));
  }
  return Dyad(i - prev, k);
}

// ---- Henkin constant coding ----
//
// tape fields: phi (wff walk), witness variable, dyad p, dyad q (absorbing).

namespace {

struct Walker; // fwd

Wff decode_wff_walk(TapeReader& t, const Signature& sig, CodingLevel level, bool last);
void encode_wff_walk(TapeWriter& t, const Signature& sig, CodingLevel level,
                     const Wff& w, bool last);

Term leaf_from_payload(const Nat& p, const Signature& sig, CodingLevel level) {
  unsigned kc = sig.constant_count();
  if (p < kc) return term_const(static_cast<unsigned>(p.get_ui()));
  Nat q = p - kc;
  if (level == CodingLevel::Base)
    return term_var(to_u64(q, "variable index"));
  if (mpz_even_p(q.get_mpz_t()))
    return term_var(to_u64(q / 2, "variable index"));
  Nat m = (q - 1) / 2;
  HenkinSignature hs(sig);
  return term_henkin(hs.henkin_from_code(m));
}

Nat leaf_to_payload(const Term& t, const Signature& sig, CodingLevel level) {
  unsigned kc = sig.constant_count();
  switch (t.tag()) {
    case TermTag::Const:
      return Nat(t.const_id());
    case TermTag::Var: {
      Nat q(static_cast<unsigned long>(t.var_index()));
      if (level == CodingLevel::Base) return q + kc;
      return q * 2 + kc;
    }
    case TermTag::HenkinConst: {
      if (level == CodingLevel::Base)
        throw std::invalid_argument("henkin constant in a base-level code");
      HenkinSignature hs(sig);
      return hs.henkin_code(*t.henkin()) * 2 + 1 + kc;
    }
    default:
      throw std::logic_error("not a leaf term");
  }
}

Term decode_term_walk(TapeReader& t, const Signature& sig, CodingLevel level, bool last) {
  bool has_fun = sig.function_count() > 0;
  FiniteCode term_tags(has_fun ? 2 : 1);
  unsigned tag = term_tags.read(t);
  if (tag == 0) {
    Nat payload = last ? t.read_rest() : read_delta(t);
    return leaf_from_payload(payload, sig, level);
  }
  FiniteCode funs(sig.function_count());
  unsigned f = funs.read(t);
  unsigned arity = sig.function(f).arity;
  std::vector<Term> args;
  args.reserve(arity);
  for (unsigned i = 0; i < arity; ++i)
    args.push_back(decode_term_walk(t, sig, level, last && i + 1 == arity));
  return term_app(sig, f, std::move(args));
}

void encode_term_walk(TapeWriter& t, const Signature& sig, CodingLevel level,
                      const Term& term, bool last) {
  bool has_fun = sig.function_count() > 0;
  FiniteCode term_tags(has_fun ? 2 : 1);
  if (term.tag() == TermTag::App) {
    if (!has_fun) throw std::invalid_argument("function application without function symbols");
    term_tags.write(t, 1);
    FiniteCode funs(sig.function_count());
    funs.write(t, term.fun_id());
    const auto& args = term.args();
    for (std::size_t i = 0; i < args.size(); ++i)
      encode_term_walk(t, sig, level, args[i], last && i + 1 == args.size());
    return;
  }
  term_tags.write(t, 0);
  Nat payload = leaf_to_payload(term, sig, level);
  if (last)
    t.write_rest(payload);
  else
    write_delta(t, payload);
}

constexpr unsigned kWffTagCount = 6; // atomic, neg, half, sub, sup, inf

Wff decode_wff_walk(TapeReader& t, const Signature& sig, CodingLevel level, bool last) {
  FiniteCode tags(kWffTagCount);
  unsigned tag = tags.read(t);
  switch (tag) {
    case 0: { // atomic
      FiniteCode preds(sig.predicate_count());
      unsigned p = preds.read(t);
      unsigned arity = sig.predicate(p).arity;
      std::vector<Term> terms;
      terms.reserve(arity);
      for (unsigned i = 0; i < arity; ++i)
        terms.push_back(decode_term_walk(t, sig, level, last && i + 1 == arity));
      return wff_atomic(sig, p, std::move(terms));
    }
    case 1: return wff_neg(decode_wff_walk(t, sig, level, last));
    case 2: return wff_half(decode_wff_walk(t, sig, level, last));
    case 3: {
      Wff a = decode_wff_walk(t, sig, level, false);
      Wff b = decode_wff_walk(t, sig, level, last);
      return wff_truncsub(a, b);
    }
    case 4: {
      std::uint64_t v = to_u64(read_delta(t), "variable index");
      return wff_sup(v, decode_wff_walk(t, sig, level, last));
    }
    case 5: {
      std::uint64_t v = to_u64(read_delta(t), "variable index");
      return wff_inf(v, decode_wff_walk(t, sig, level, last));
    }
  }
  throw std::logic_error("unreachable wff tag code");
}

void encode_wff_walk(TapeWriter& t, const Signature& sig, CodingLevel level,
                     const Wff& w, bool last) {
  FiniteCode tags(kWffTagCount);
  switch (w.tag()) {
    case WffTag::Atomic: {
      tags.write(t, 0);
      FiniteCode preds(sig.predicate_count());
      preds.write(t, w.pred_id());
      const auto& terms = w.terms();
      for (std::size_t i = 0; i < terms.size(); ++i)
        encode_term_walk(t, sig, level, terms[i], last && i + 1 == terms.size());
      return;
    }
    case WffTag::Neg:
      tags.write(t, 1);
      encode_wff_walk(t, sig, level, w.child(), last);
      return;
    case WffTag::Half:
      tags.write(t, 2);
      encode_wff_walk(t, sig, level, w.child(), last);
      return;
    case WffTag::TruncSub:
      tags.write(t, 3);
      encode_wff_walk(t, sig, level, w.child(0), false);
      encode_wff_walk(t, sig, level, w.child(1), last);
      return;
    case WffTag::Sup:
      tags.write(t, 4);
      write_delta(t, Nat(static_cast<unsigned long>(w.bound_var())));
      encode_wff_walk(t, sig, level, w.child(), last);
      return;
    case WffTag::Inf:
      tags.write(t, 5);
      write_delta(t, Nat(static_cast<unsigned long>(w.bound_var())));
      encode_wff_walk(t, sig, level, w.child(), last);
      return;
    default:
      throw std::invalid_argument("shorthand node reached the coder");
  }
}

} // namespace

Nat HenkinSignature::henkin_code(const HenkinConstant& c) const {
  TapeWriter t;
  encode_wff_walk(t, *base_, CodingLevel::Henkin, c.phi, false);
  write_delta(t, Nat(static_cast<unsigned long>(c.var)));
  write_delta(t, dyad_to_index(c.p));
  t.write_rest(dyad_to_index(c.q));
  return t.finish();
}

HenkinConstantPtr HenkinSignature::henkin_from_code(const Nat& code) const {
  TapeReader t{code};
  Wff phi = decode_wff_walk(t, *base_, CodingLevel::Henkin, false);
  std::uint64_t var = to_u64(read_delta(t), "variable index");
  Dyad p = dyad_from_index(read_delta(t));
  Dyad q = dyad_from_index(t.read_rest());
  return make_henkin_constant(phi, var, p, q);
}

Nat HenkinSignature::constant_code(const Term& constant_term) const {
  switch (constant_term.tag()) {
    case TermTag::Const:
      return Nat(constant_term.const_id());
    case TermTag::HenkinConst:
      return henkin_code(*constant_term.henkin()) + base_->constant_count();
    default:
      throw std::invalid_argument("not a constant term");
  }
}

Term HenkinSignature::constant_from_code(const Nat& code) const {
  if (code < base_->constant_count())
    return term_const(static_cast<unsigned>(code.get_ui()));
  return term_henkin(henkin_from_code(code - base_->constant_count()));
}

HenkinSignature henkin_extend(const Signature& sig) { return HenkinSignature(sig); }

// ---- wff coder ----

Wff WffCoder::decode(const Nat& code) const {
  TapeReader t{code};
  return decode_wff_walk(t, *sig_, level_, true);
}

Nat WffCoder::encode(const Wff& w) const {
  Wff core = expand_shorthand(w);
  if (level_ == CodingLevel::Base && core.has_henkin())
    throw std::invalid_argument("henkin constant in a base-level code");
  TapeWriter t;
  encode_wff_walk(t, *sig_, level_, core, true);
  return t.finish();
}

Term WffCoder::decode_term(const Nat& code) const {
  TapeReader t{code};
  return decode_term_walk(t, *sig_, level_, true);
}

Nat WffCoder::encode_term(const Term& term) const {
  TapeWriter t;
  encode_term_walk(t, *sig_, level_, term, true);
  return t.finish();
}

// ---- table enumeration ----

TableEnumeration::TableEnumeration(WffCoder coder, const std::vector<Wff>& table,
                                   std::string label)
    : coder_(coder), label_(std::move(label)) {
  // fwd maps enumeration index -> canonical code
  std::vector<Nat> codes;
  codes.reserve(table.size());
  for (const Wff& w : table) codes.push_back(coder_.encode(w));
  for (std::size_t i = 0; i < codes.size(); ++i) {
    Nat idx(static_cast<unsigned long>(i));
    if (fwd_.count(idx)) throw std::invalid_argument("duplicate wff in enumeration table");
    fwd_[idx] = codes[i];
  }
  // displaced arguments (table codes outside 0..m-1) get the freed small
  // slots, in sorted order, keeping the map a bijection
  std::vector<Nat> free_targets; // values in 0..m-1 not used as a table code
  std::vector<Nat> orphan_sources; // table codes >= m
  for (std::size_t i = 0; i < codes.size(); ++i) {
    Nat idx(static_cast<unsigned long>(i));
    bool is_code = false;
    for (const Nat& c : codes)
      if (c == idx) { is_code = true; break; }
    if (!is_code) free_targets.push_back(idx);
  }
  for (const Nat& c : codes) {
    if (c >= Nat(static_cast<unsigned long>(codes.size()))) orphan_sources.push_back(c);
  }
  std::sort(free_targets.begin(), free_targets.end());
  std::sort(orphan_sources.begin(), orphan_sources.end());
  if (free_targets.size() != orphan_sources.size())
    throw std::logic_error("enumeration permutation mismatch");
  for (std::size_t i = 0; i < free_targets.size(); ++i)
    fwd_[orphan_sources[i]] = free_targets[i];
  for (const auto& [a, b] : fwd_) inv_[b] = a;
  if (inv_.size() != fwd_.size())
    throw std::invalid_argument("duplicate wff in enumeration table");
}

Wff TableEnumeration::decode(const Nat& n) const {
  auto it = fwd_.find(n);
  return coder_.decode(it == fwd_.end() ? n : it->second);
}

Nat TableEnumeration::encode(const Wff& w) const {
  Nat c = coder_.encode(w);
  auto it = inv_.find(c);
  return it == inv_.end() ? c : it->second;
}

std::vector<Wff> test_enumeration_table(const Signature& sig) {
  std::vector<Wff> table;
  table.push_back(wff_num(Nat(0), 0));
  table.push_back(wff_num(Nat(1), 0));
  table.push_back(wff_num(Nat(1), 1));
  table.push_back(wff_num(Nat(1), 2));
  table.push_back(wff_num(Nat(3), 2));

  std::optional<unsigned> unary;
  for (unsigned p = 0; p < sig.predicate_count(); ++p)
    if (p != Signature::metric_symbol && sig.predicate(p).arity == 1) {
      unary = p;
      break;
    }
  if (sig.constant_count() == 0) return table;
  std::vector<Term> points;
  points.push_back(term_const(0));
  if (sig.constant_count() > 1) points.push_back(term_const(1));
  if (unary) {
    Wff body = wff_atomic(sig, *unary, {term_var(0)});
    points.push_back(term_henkin(body, 0, Dyad(Nat(1), 1), Dyad(Nat(1), 0)));
  }
  if (unary)
    for (const Term& t : points) table.push_back(wff_atomic(sig, *unary, {t}));
  for (const Term& a : points)
    for (const Term& b : points)
      table.push_back(wff_atomic(sig, Signature::metric_symbol, {a, b}));
  return table;
}

std::unique_ptr<WffEnumeration> make_enumeration(const std::string& which, const Signature& sig,
                                                 CodingLevel level) {
  WffCoder coder(sig, level);
  if (which == "canonical") return std::make_unique<CanonicalEnumeration>(coder);
  if (which == "test")
    return std::make_unique<TableEnumeration>(coder, test_enumeration_table(sig), "test");
  throw std::invalid_argument("unknown enumeration: " + which);
}

} // namespace contlog
