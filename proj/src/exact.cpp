#include "galoisrad/exact.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>

namespace galoisrad {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ImaginaryResidue: return "ImaginaryResidue";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::ConvergenceFailure: return "ConvergenceFailure";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::UnsupportedSize: return "UnsupportedSize";
    case Errc::MalformedCycleString: return "MalformedCycleString";
    case Errc::PointOutOfRange: return "PointOutOfRange";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::NotNormal: return "NotNormal";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::DegenerateConstraint: return "DegenerateConstraint";
    case Errc::AlreadyBinomial: return "AlreadyBinomial";
    case Errc::NoCandidateSurvives: return "NoCandidateSurvives";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::ExhaustedCandidates: return "ExhaustedCandidates";
    case Errc::ClusterAmbiguity: return "ClusterAmbiguity";
    case Errc::AlphaCollision: return "AlphaCollision";
    case Errc::DivisionByZeroAtEval: return "DivisionByZeroAtEval";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Rational helpers

Rational make_rational(long num, long den) {
  if (den == 0) fail(Errc::DivisionByZero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(Errc::DivisionByZero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  try {
    if (slash == std::string::npos) {
      num = Integer(text, 10);
    } else {
      num = Integer(text.substr(0, slash), 10);
      den = Integer(text.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    fail(Errc::ParseError, "not a rational: '" + text + "'");
  }
  return make_rational(num, den);
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) fail(Errc::DivisionByZero, "zero to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -exponent);
  }
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return make_rational(num, den);
}

Rational checked_div(const Rational& a, const Rational& b) {
  if (b == 0) fail(Errc::DivisionByZero, "rational division by zero");
  Rational q = a / b;
  return q;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::optional<Rational> is_perfect_square(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  if (mpz_perfect_square_p(r.get_num_mpz_t()) == 0 || mpz_perfect_square_p(r.get_den_mpz_t()) == 0) {
    return std::nullopt;
  }
  Integer num;
  Integer den;
  mpz_sqrt(num.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), r.get_den_mpz_t());
  return make_rational(num, den);
}

// ---------------------------------------------------------------------------
// BigFloat

namespace {

int checked_precision(int bits) {
  if (bits < kMinPrecision) fail(Errc::InvalidArgument, "precision below 64 bits");
  return bits;
}

int max_prec(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigFloat::BigFloat(int precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, int precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, int precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

Rational BigFloat::to_rational() const {
  if (mpfr_zero_p(value_)) return Rational(0);
  if (!mpfr_number_p(value_)) fail(Errc::InvariantViolation, "non-finite float");
  Integer mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), value_);
  Rational r(mant);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

long BigFloat::exponent2() const {
  if (mpfr_zero_p(value_)) return LONG_MIN / 4;
  return static_cast<long>(mpfr_get_exp(value_));
}

std::string BigFloat::to_fixed(int digits) const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Rf", digits, value_);
  std::string text(buffer);
  mpfr_free_str(buffer);
  if (!text.empty() && text.front() == '-' &&
      text.find_first_not_of("0.", 1) == std::string::npos) {
    text.erase(0, 1);
  }
  return text;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (b.is_zero()) fail(Errc::DivisionByZero, "float division by zero");
  BigFloat r(max_prec(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.get(), value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pi(int precision_bits) {
  BigFloat r(precision_bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow2(long e, int precision_bits) {
  BigFloat r(1L, precision_bits);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

#define GALOISRAD_UNARY(name, fn)                  \
  BigFloat name(const BigFloat& x) {               \
    BigFloat r(x.precision());                     \
    fn(r.get(), x.get(), MPFR_RNDN);               \
    return r;                                      \
  }

GALOISRAD_UNARY(sqrt, mpfr_sqrt)
GALOISRAD_UNARY(abs, mpfr_abs)
GALOISRAD_UNARY(cos, mpfr_cos)
GALOISRAD_UNARY(sin, mpfr_sin)
GALOISRAD_UNARY(exp, mpfr_exp)
GALOISRAD_UNARY(log, mpfr_log)

#undef GALOISRAD_UNARY

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(max_prec(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(max_prec(x, y));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------------------------
// ApproxComplex

ApproxComplex::ApproxComplex(int precision_bits) : re_(precision_bits), im_(precision_bits) {}

ApproxComplex::ApproxComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
  if (re_.precision() != im_.precision()) {
    int p = std::max(re_.precision(), im_.precision());
    BigFloat r(p);
    BigFloat i(p);
    mpfr_set(r.get(), re_.get(), MPFR_RNDN);
    mpfr_set(i.get(), im_.get(), MPFR_RNDN);
    re_ = std::move(r);
    im_ = std::move(i);
  }
}

ApproxComplex::ApproxComplex(const Rational& re, int precision_bits)
    : re_(re, precision_bits), im_(precision_bits) {}

ApproxComplex operator+(const ApproxComplex& a, const ApproxComplex& b) {
  return {a.re_ + b.re_, a.im_ + b.im_};
}

ApproxComplex operator-(const ApproxComplex& a, const ApproxComplex& b) {
  return {a.re_ - b.re_, a.im_ - b.im_};
}

ApproxComplex operator*(const ApproxComplex& a, const ApproxComplex& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

ApproxComplex operator/(const ApproxComplex& a, const ApproxComplex& b) {
  if (b.is_zero()) fail(Errc::DivisionByZero, "complex division by zero");
  BigFloat den = b.re_ * b.re_ + b.im_ * b.im_;
  return {(a.re_ * b.re_ + a.im_ * b.im_) / den, (a.im_ * b.re_ - a.re_ * b.im_) / den};
}

ApproxComplex ApproxComplex::polar(const BigFloat& r, const BigFloat& t) {
  return {r * cos(t), r * sin(t)};
}

ApproxComplex ApproxComplex::root_of_unity(long order, long power, int precision_bits) {
  if (order <= 0) fail(Errc::InvalidArgument, "root of unity order must be positive");
  long p = ((power % order) + order) % order;
  // Exact values on the axes keep real roots real.
  if (p == 0) return ApproxComplex(Rational(1), precision_bits);
  if (2 * p == order) return ApproxComplex(Rational(-1), precision_bits);
  if (4 * p == order) return {BigFloat(precision_bits), BigFloat(1L, precision_bits)};
  if (4 * p == 3 * order) return {BigFloat(precision_bits), BigFloat(-1L, precision_bits)};
  BigFloat angle = BigFloat::pi(precision_bits) * BigFloat(2 * p, precision_bits) / BigFloat(order, precision_bits);
  return polar(BigFloat(1L, precision_bits), angle);
}

std::string ApproxComplex::to_string(int digits) const {
  std::string s = re_.to_fixed(digits);
  std::string i = im_.to_fixed(digits);
  if (i.front() == '-') {
    s += " - " + i.substr(1) + "i";
  } else {
    s += " + " + i + "i";
  }
  return s;
}

ApproxComplex kth_root(const ApproxComplex& z, long k, long branch) {
  if (k < 1) fail(Errc::InvalidArgument, "root index must be positive");
  int prec = z.precision_bits();
  if (z.is_zero()) return ApproxComplex(prec);
  BigFloat r = z.abs();
  BigFloat root_r(prec);
  mpfr_rootn_ui(root_r.get(), r.get(), static_cast<unsigned long>(k), MPFR_RNDN);
  ApproxComplex principal = [&] {
    // Exact axis handling for positive reals avoids spurious imaginary noise.
    if (z.im().is_zero() && z.re().sign() > 0) return ApproxComplex(root_r, BigFloat(prec));
    BigFloat angle = z.arg() / BigFloat(k, prec);
    return ApproxComplex::polar(root_r, angle);
  }();
  long b = ((branch % k) + k) % k;
  if (b == 0) return principal;
  return principal * ApproxComplex::root_of_unity(k, b, prec);
}

ApproxComplex integer_power(const ApproxComplex& z, unsigned long e) {
  ApproxComplex result(Rational(1), z.precision_bits());
  ApproxComplex base = z;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

BigFloat residual_tolerance(int precision_bits) { return BigFloat::pow2(-(precision_bits / 2), precision_bits); }

Rational rational_reconstruct(const Rational& value, const Integer& max_den) {
  if (max_den < 1) fail(Errc::InvalidArgument, "max_den must be at least 1");
  // Convergents h/k of the continued fraction of value.
  Integer h_prev = 1, h = 0;
  Integer k_prev = 0, k = 1;
  Integer num = value.get_num();
  Integer den = value.get_den();
  Rational best;
  bool have_best = false;
  while (true) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Integer h_next = a * h_prev + h;
    Integer k_next = a * k_prev + k;
    if (k_next > max_den) break;
    h = h_prev;
    k = k_prev;
    h_prev = h_next;
    k_prev = k_next;
    best = make_rational(h_next, k_next);
    have_best = true;
    Integer rem = num - a * den;
    if (rem == 0) break;
    num = den;
    den = rem;
  }
  if (!have_best) {
    // Only possible when the very first convergent already exceeds the cap,
    // which cannot happen since its denominator is 1.
    fail(Errc::InvariantViolation, "no convergent within the denominator cap");
  }
  return best;
}

Rational rational_reconstruct(const ApproxComplex& x, const Integer& max_den) {
  BigFloat tol = residual_tolerance(x.precision_bits());
  if (tol < abs(x.im())) fail(Errc::ImaginaryResidue, "imaginary part exceeds tolerance");
  return rational_reconstruct(x.re().to_rational(), max_den);
}

}  // namespace galoisrad
