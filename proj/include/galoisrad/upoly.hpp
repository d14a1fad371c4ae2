#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "galoisrad/exact.hpp"

namespace galoisrad {

/// Dense univariate polynomial over Q; coeffs[i] is the coefficient of x^i.
/// The zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  /// x - r
  static UniPoly linear_root(const Rational& r);
  static UniPoly from_ints(std::initializer_list<long> coeffs);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i (zero beyond the degree).
  Rational operator[](int i) const;
  Rational leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }
  UniPoly monic() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, const UniPoly& a);
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  UniPoly pow(unsigned e) const;
  UniPoly derivative() const;
  /// this(inner(x))
  UniPoly compose(const UniPoly& inner) const;
  Rational eval(const Rational& x) const;
  ApproxComplex eval(const ApproxComplex& x) const;
  /// Reverse-coefficient polynomial x^deg p(1/x) (for x-free trailing terms
  /// the degree drops accordingly).
  UniPoly reversed() const;

  /// Text such as "x^4 - 10x^2 + 1".
  std::string to_string(char var = 'x') const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<UniPoly, UniPoly> div_rem(const UniPoly& a, const UniPoly& b);
/// Quotient when b divides a exactly; fails with InvariantViolation otherwise.
UniPoly div_exact(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& divisor, const UniPoly& a);
/// Monic gcd (zero if both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// p / gcd(p, p'), monic.
UniPoly squarefree_part(const UniPoly& p);
bool is_squarefree(const UniPoly& p);

/// Determinant of the Sylvester matrix with deg(q) rows of p's coefficients
/// above deg(p) rows of q's. Equals lc(p)^deg(q) * prod q(roots of p).
Rational resultant(const UniPoly& p, const UniPoly& q);
/// (-1)^(n(n-1)/2) Res(p, p') / lc(p).
Rational discriminant(const UniPoly& p);

struct Factor {
  UniPoly poly;
  int multiplicity = 1;
};

struct FactorList {
  Rational unit;
  std::vector<Factor> factors;
  UniPoly product() const;
};

inline constexpr int kFactorDegreeGuard = 8;

/// Complete factorization over Q into monic irreducibles. Factors are sorted
/// by degree, then coefficients. Degree guard: kFactorDegreeGuard.
FactorList factor_over_Q(const UniPoly& p);
bool is_irreducible(const UniPoly& p);
/// Rational roots of p (each listed once).
std::vector<Rational> rational_roots(const UniPoly& p);

/// Monic polynomial with the given roots.
UniPoly elementary_symmetric_from_roots(std::span<const Rational> roots);
/// Power sums p_1..p_k of the roots of p, by Newton's recurrence.
std::vector<Rational> coefficients_to_power_sums(const UniPoly& p, int k);

/// deg p approximate roots (Durand-Kerner from perturbed roots of unity, then
/// Newton polishing), sorted lexicographically by (re, im) rounded at half
/// precision. Input must be squarefree.
std::vector<ApproxComplex> numeric_roots(const UniPoly& p, int precision_bits = kDefaultPrecision);

/// Lexicographic (re, im) ordering after rounding to multiples of
/// 2^(-precision/2).
bool root_order_less(const ApproxComplex& a, const ApproxComplex& b);

/// Generic fraction-free (Bareiss) determinant over an integral domain whose
/// element type provides +, -, * and exact division via div_exact(a, b).
template <class T, class IsZero, class DivExact>
T bareiss_determinant(std::vector<std::vector<T>> m, T one, IsZero is_zero, DivExact div_exact_fn) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  T prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(m[swap_row][k])) ++swap_row;
      if (swap_row == n) return T{};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = div_exact_fn(num, prev);
      }
    }
    prev = m[k][k];
  }
  T det = m[n - 1][n - 1];
  if (negate) det = T{} - det;
  return det;
}

}  // namespace galoisrad
