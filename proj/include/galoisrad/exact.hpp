#pragma once

// Exact integers and rationals (GMP) plus the high-precision complex type
// (MPFR) used for root labeling and residual checks.

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>

#include "galoisrad/error.hpp"

namespace galoisrad {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr int kDefaultPrecision = 256;
inline constexpr int kMinPrecision = 64;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);
/// Accepts "p", "-p", "p/q".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

Integer gcd(const Integer& a, const Integer& b);
Rational pow(const Rational& base, long exponent);
Rational checked_div(const Rational& a, const Rational& b);
bool is_integer(const Rational& r);

/// Square root of r when r is the square of a rational.
std::optional<Rational> is_perfect_square(const Rational& r);

/// RAII wrapper around an mpfr_t at a fixed precision.
class BigFloat {
 public:
  explicit BigFloat(int precision_bits = kDefaultPrecision);
  BigFloat(long value, int precision_bits);
  BigFloat(const Rational& value, int precision_bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  int precision() const { return static_cast<int>(mpfr_get_prec(value_)); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Exact binary value of the float as a rational.
  Rational to_rational() const;
  /// Base-2 exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
  long exponent2() const;
  /// Fixed-point decimal text with the given number of fractional digits.
  std::string to_fixed(int digits) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.value_, b.value_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }

  static BigFloat pi(int precision_bits);
  /// 2^e at the given precision.
  static BigFloat pow2(long e, int precision_bits);

 private:
  mpfr_t value_;
};

BigFloat sqrt(const BigFloat& x);
BigFloat abs(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);

/// Complex number with high-precision real and imaginary parts.
class ApproxComplex {
 public:
  explicit ApproxComplex(int precision_bits = kDefaultPrecision);
  ApproxComplex(BigFloat re, BigFloat im);
  ApproxComplex(const Rational& re, int precision_bits);

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  int precision_bits() const { return re_.precision(); }

  BigFloat abs() const { return hypot(re_, im_); }
  BigFloat arg() const { return atan2(im_, re_); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  friend ApproxComplex operator+(const ApproxComplex& a, const ApproxComplex& b);
  friend ApproxComplex operator-(const ApproxComplex& a, const ApproxComplex& b);
  friend ApproxComplex operator*(const ApproxComplex& a, const ApproxComplex& b);
  friend ApproxComplex operator/(const ApproxComplex& a, const ApproxComplex& b);
  ApproxComplex operator-() const { return {-re_, -im_}; }
  ApproxComplex conj() const { return {re_, -im_}; }

  /// r (cos t + i sin t).
  static ApproxComplex polar(const BigFloat& r, const BigFloat& t);
  /// exp(2 pi i power / order).
  static ApproxComplex root_of_unity(long order, long power, int precision_bits);

  std::string to_string(int digits = 20) const;

 private:
  BigFloat re_;
  BigFloat im_;
};

/// Principal k-th root times exp(2 pi i branch / k).
ApproxComplex kth_root(const ApproxComplex& z, long k, long branch = 0);
ApproxComplex integer_power(const ApproxComplex& z, unsigned long e);

/// 2^(-precision_bits/2): the global residual / imaginary-discard tolerance.
BigFloat residual_tolerance(int precision_bits);

/// Closest continued-fraction convergent p/q of re(x) with q <= max_den.
/// Throws ImaginaryResidue when |im(x)| exceeds residual_tolerance.
Rational rational_reconstruct(const ApproxComplex& x, const Integer& max_den);
Rational rational_reconstruct(const Rational& value, const Integer& max_den);

}  // namespace galoisrad
