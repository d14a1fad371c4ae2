#pragma once

#include <array>
#include <vector>

#include "galoisrad/exact.hpp"
#include "galoisrad/mpoly.hpp"
#include "galoisrad/radex.hpp"
#include "galoisrad/upoly.hpp"

namespace galoisrad {

struct QuadraticSolution {
  std::array<RadicalExpr, 2> roots;
  /// V1 = sqrt(a^2 - 4b), the difference of the two roots.
  RadicalExpr v1;
  /// V^2 + 4b - a^2
  UniPoly min_poly;
};

/// Roots of x^2 + a x + b.
QuadraticSolution solve_quadratic(const Rational& a, const Rational& b);

/// x^3 + a x = b
struct DepressedCubic {
  Rational a;
  Rational b;
  UniPoly poly() const;
};

/// u^3 + a2 u^2 + a1 u + a0 becomes x^3 + a x = b under u = x - shift.
struct CubicShift {
  Rational shift;
  Rational a;
  Rational b;
  DepressedCubic depressed() const { return {a, b}; }
};

CubicShift depress_cubic(const Rational& a0, const Rational& a1, const Rational& a2);

struct CardanoSolution {
  std::array<RadicalExpr, 3> roots;
  /// Euler's y_k and z_k with x_k = y_k - z_k and y_k z_k = a/3.
  std::array<RadicalExpr, 3> y;
  std::array<RadicalExpr, 3> z;
  /// The a < 0 formula variant was used.
  bool negative_branch = false;
  /// Branch index of the second cube root, chosen so that y_0 z_0 = a/3.
  long pairing_branch = 0;
};

/// Cardano's formulas with the cube-root branches paired per Euler.
CardanoSolution cardano_roots(const DepressedCubic& c, int precision_bits = kDefaultPrecision);

/// Roots of u^3 + a2 u^2 + a1 u + a0 (depress, Cardano, shift back).
std::array<RadicalExpr, 3> solve_cubic(const Rational& a0, const Rational& a1, const Rational& a2,
                                       int precision_bits = kDefaultPrecision);

/// y^2 - b y - a^3/27, whose roots are the beta values of the cubic.
UniPoly cubic_resolvent(const DepressedCubic& c);

/// rho_k = sum_i zeta^(k i) x_i with zeta a primitive n-th root of unity held
/// as the single parameter of the ring and reduced modulo Z_n. n <= 5.
MultiPoly lagrange_rho(int k, int n);
/// beta_k = (rho_k / n)^n, reduced modulo Z_n.
MultiPoly lagrange_beta(int k, int n);

/// Roots of x^4 + a3 x^3 + a2 x^2 + a1 x + a0 via Ferrari's resolvent cubic.
std::array<RadicalExpr, 4> solve_quartic(const Rational& a0, const Rational& a1, const Rational& a2, const Rational& a3,
                                         int precision_bits = kDefaultPrecision);

/// Radical roots of any polynomial of degree 1..4 (with multiplicity).
std::vector<RadicalExpr> solve_by_radicals(const UniPoly& p, int precision_bits = kDefaultPrecision);

}  // namespace galoisrad
