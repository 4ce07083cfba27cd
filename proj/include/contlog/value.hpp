#ifndef CONTLOG_VALUE_HPP
#define CONTLOG_VALUE_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace contlog {

using Nat = mpz_class;
using Rational = mpq_class;

/// A truth value: an exact rational in [0,1].
///
/// All connective arithmetic is exact; no binary floating point appears in
/// any value path. Out-of-range construction throws.
class Value {
public:
  Value() : r_(0) {}
  Value(const Rational& r) : r_(r) {
    r_.canonicalize();
    if (r_ < 0 || r_ > 1) throw std::domain_error("value outside [0,1]: " + r_.get_str());
  }
  Value(long num, unsigned long den) : Value(Rational(num, den)) {}

  const Rational& rational() const { return r_; }

  /// Serialized as "N/D" in lowest terms, denominator always present.
  std::string str() const {
    return r_.get_num().get_str() + "/" + r_.get_den().get_str();
  }

  friend bool operator==(const Value& a, const Value& b) { return a.r_ == b.r_; }
  friend bool operator!=(const Value& a, const Value& b) { return a.r_ != b.r_; }
  friend bool operator<(const Value& a, const Value& b) { return a.r_ < b.r_; }
  friend bool operator<=(const Value& a, const Value& b) { return a.r_ <= b.r_; }
  friend bool operator>(const Value& a, const Value& b) { return a.r_ > b.r_; }
  friend bool operator>=(const Value& a, const Value& b) { return a.r_ >= b.r_; }

private:
  Rational r_;
};

// The truncated connective algebra on [0,1].
Value value_neg(const Value& v);                      // 1 - v
Value value_half(const Value& v);                     // v / 2
Value value_truncsub(const Value& v, const Value& w); // max(v - w, 0)
Value value_truncadd(const Value& v, const Value& w); // min(v + w, 1)
Value value_scalar(unsigned long m, const Value& v);  // min(m * v, 1)

/// Exact value of the dyadic numeral ℓ/2^k. Rejects ℓ > 2^k.
Value dyadic_value(const Nat& num, unsigned long expo);

/// Parse "N/D" (or bare "N") into a Value; rejects values outside [0,1].
Value parse_value(const std::string& text);

/// 2^{-k} as an exact rational.
Rational pow2_neg(unsigned long k);

} // namespace contlog

#endif
