#pragma once

#include <array>
#include <vector>

#include "galoisrad/exact.hpp"
#include "galoisrad/radex.hpp"
#include "galoisrad/upoly.hpp"

namespace galoisrad {

/// y = x^(n-1) + b1 x^(n-2) + ... + b_(n-1) applied to a degree-n polynomial.
struct TschirnhausMap {
  std::vector<Rational> aux_coeffs;  // b1 .. b_(n-1)
  int source_degree = 0;

  /// Checks aux_coeffs.size() == source_degree - 1.
  void validate() const;
  /// The auxiliary polynomial g(x).
  UniPoly aux_poly() const;
};

/// Res_x(P(x), y - g(x)) = prod_i (y - g(x_i)), computed as a fraction-free
/// Sylvester determinant over Q[y]. P must be monic of degree >= 2.
UniPoly eliminate(const UniPoly& p, const TschirnhausMap& t);

/// p + q sqrt(d) with rational p, q, d, kept exact. A perfect-square d is
/// folded into p on construction so that is_zero() is exact.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational p, Rational q, Rational d);
  static QuadraticSurd rational(const Rational& p) { return QuadraticSurd(p, Rational(0), Rational(0)); }

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const Rational& d() const { return d_; }
  bool is_rational() const { return q_ == 0; }
  bool is_zero() const { return p_ == 0 && q_ == 0; }

  friend QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator*(const Rational& c, const QuadraticSurd& a);
  friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && (a.q_ == 0 || a.d_ == b.d_);
  }

  RadicalExpr to_expr() const;
  ApproxComplex eval(int precision_bits = kDefaultPrecision) const;

 private:
  Rational p_;
  Rational q_;
  Rational d_;
};

/// Result of reducing x^3 + a x + b to y^3 = c with y = x^2 + b1 x + b2.
struct CubicReduction {
  Rational a;
  Rational b;
  QuadraticSurd b1;
  Rational b2;
  QuadraticSurd c;
  /// Coefficients of y^2 and y in Q(y), exactly zero after reduction.
  QuadraticSurd a1_residual;
  QuadraticSurd a2_residual;
  /// y^3 - c; only for rational c.
  UniPoly binomial_if_rational() const;
  /// Available when b1 turned out rational.
  bool map_is_rational() const { return b1.is_rational(); }
  TschirnhausMap rational_map() const;
};

/// Fixes b2 from the linear constraint on the y^2 coefficient and b1 from the
/// quadratic constraint on the y coefficient (the + branch of its root).
/// Throws UnsupportedDegree unless deg p = 3, InvalidArgument when p is not
/// depressed and monic, AlreadyBinomial when a = 0.
CubicReduction reduce_cubic_to_binomial(const UniPoly& p);

/// Candidates x with x^2 + b1 x + b2 = y_value; only those with
/// |P(x)| < 2^(-precision/2) are kept, best residual first.
/// Throws NoCandidateSurvives when none passes.
std::vector<RadicalExpr> back_substitute(const UniPoly& p, const RadicalExpr& b1, const RadicalExpr& b2,
                                         const RadicalExpr& y_value, int precision_bits = kDefaultPrecision);
std::vector<RadicalExpr> back_substitute(const UniPoly& p, const TschirnhausMap& t, const RadicalExpr& y_value,
                                         int precision_bits = kDefaultPrecision);

struct CandidateSplit {
  std::vector<RadicalExpr> kept;      // best residual first
  std::vector<RadicalExpr> rejected;  // false roots
};
/// Both candidates of the auxiliary quadratic, split by the residual filter.
CandidateSplit split_candidates(const UniPoly& p, const RadicalExpr& b1, const RadicalExpr& b2,
                                const RadicalExpr& y_value, int precision_bits = kDefaultPrecision);

struct TschirnhausSolution {
  /// Shift applied to depress the input (x = u + shift).
  Rational shift;
  /// Present when the depressed cubic had a nonzero linear term.
  bool reduced = false;
  CubicReduction reduction;
  /// Values y_k = zeta_3^k c^(1/3) of the binomial.
  std::vector<RadicalExpr> y_values;
  /// Candidates rejected by the residual filter.
  std::vector<RadicalExpr> false_roots;
  /// The three roots of the original cubic.
  std::vector<RadicalExpr> roots;
};

/// Depress, reduce to binomial form, solve y^3 = c, back-substitute and
/// filter the false roots. Any monic rational cubic.
TschirnhausSolution tschirnhaus_solve(const UniPoly& p, int precision_bits = kDefaultPrecision);

}  // namespace galoisrad
