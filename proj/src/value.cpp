#include "contlog/value.hpp"

namespace contlog {

Value value_neg(const Value& v) {
  return Value(Rational(1) - v.rational());
}

Value value_half(const Value& v) {
  return Value(v.rational() / 2);
}

Value value_truncsub(const Value& v, const Value& w) {
  Rational d = v.rational() - w.rational();
  if (d < 0) d = 0;
  return Value(d);
}

Value value_truncadd(const Value& v, const Value& w) {
  Rational s = v.rational() + w.rational();
  if (s > 1) s = 1;
  return Value(s);
}

Value value_scalar(unsigned long m, const Value& v) {
  Rational s = v.rational() * m;
  if (s > 1) s = 1;
  return Value(s);
}

Value dyadic_value(const Nat& num, unsigned long expo) {
  Nat den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), expo);
  if (num > den) throw std::domain_error("dyadic numeral with numerator above 2^k");
  Rational r(num, den);
  r.canonicalize();
  return Value(r);
}

Value parse_value(const std::string& text) {
  auto slash = text.find('/');
  Rational r;
  if (slash == std::string::npos) {
    r = Rational(Nat(text));
  } else {
    Nat num(text.substr(0, slash));
    Nat den(text.substr(slash + 1));
    if (den == 0) throw std::domain_error("zero denominator: " + text);
    r = Rational(num, den);
  }
  r.canonicalize();
  return Value(r);
}

Rational pow2_neg(unsigned long k) {
  Nat den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
  Rational r(1, den);
  r.canonicalize();
  return r;
}

} // namespace contlog
