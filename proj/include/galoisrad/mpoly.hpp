#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "galoisrad/exact.hpp"
#include "galoisrad/permgrp.hpp"
#include "galoisrad/upoly.hpp"

namespace galoisrad {

/// Sparse polynomial over Q in root variables x1..xn followed by parameter
/// variables (a resolvent variable y, a root of unity, ...). At most 8
/// variables in total; each exponent must stay below 256.
///
/// Monomials are packed one byte per variable with x1 in the most
/// significant byte, so integer order on the packed word is the
/// lexicographic order x1 > x2 > ... > xn > params.
class MultiPoly {
 public:
  using Monomial = std::uint64_t;
  static constexpr int kMaxVars = 8;

  MultiPoly() = default;
  MultiPoly(int nroots, int nparams);
  static MultiPoly constant(int nroots, int nparams, const Rational& c);
  /// x_i, 1-based.
  static MultiPoly root(int nroots, int nparams, int i);
  /// j-th parameter, 0-based.
  static MultiPoly param(int nroots, int nparams, int j);
  /// Arbitrary monomial from an exponent vector of length nvars.
  static MultiPoly monomial(int nroots, int nparams, std::span<const int> exponents, const Rational& c);

  int nroots() const { return nroots_; }
  int nparams() const { return nparams_; }
  int nvars() const { return nroots_ + nparams_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Constant term, and whether no other term exists.
  bool is_constant() const;
  Rational constant_term() const;

  static int exponent(Monomial m, int var) { return static_cast<int>((m >> shift(var)) & 0xffU); }
  static Monomial pack(std::span<const int> exponents);
  std::vector<int> exponents(Monomial m) const;
  int total_degree() const;
  int degree_in(int var) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& a);
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nroots_ == b.nroots_ && a.nparams_ == b.nparams_ && a.terms_ == b.terms_;
  }
  MultiPoly pow(unsigned e) const;

  /// Relabels x_i -> x_sigma(i); parameters are fixed.
  MultiPoly apply_permutation(const Permutation& sigma) const;
  /// Replaces variable `var` (0-based over all variables) by a rational.
  MultiPoly substitute(int var, const Rational& value) const;
  /// Value at a full assignment of all variables.
  Rational evaluate(std::span<const Rational> values) const;
  ApproxComplex evaluate(std::span<const ApproxComplex> values) const;
  /// Reduces parameter j modulo a monic univariate polynomial.
  MultiPoly reduce_param_mod(int j, const UniPoly& modulus) const;
  /// Coefficient of param_j^k as a polynomial in the remaining variables.
  MultiPoly coefficient_of_param(int j, int k) const;

  /// Text with variable names: x1..xn then the given parameter names.
  std::string to_string(const std::vector<std::string>& param_names = {}, const std::string& root_name = "x") const;

  /// Adds c * m directly (m must be a valid packed monomial for this ring).
  void add_term(Monomial m, const Rational& c);

 private:
  static int shift(int var) { return 8 * (kMaxVars - 1 - var); }
  void check_compatible(const MultiPoly& o) const;

  int nroots_ = 0;
  int nparams_ = 0;
  std::map<Monomial, Rational> terms_;
};

/// k-th elementary symmetric polynomial in x1..xn.
MultiPoly elementary_symmetric(int nroots, int nparams, int k);

/// Invariant under the transposition (12) and the n-cycle (12...n).
bool is_symmetric(const MultiPoly& f);

/// Writes a symmetric f as a polynomial in e1..en: in the result, the root
/// slots carry the exponents of e1..en and parameters are untouched. Uses the
/// lexicographic leading-term algorithm.
MultiPoly symmetric_reduce(const MultiPoly& f);

/// Inverse of symmetric_reduce: substitutes e_k by its expansion in x1..xn.
MultiPoly expand_elementary(const MultiPoly& reduced);

/// Substitutes e_k = (-1)^k a_k for a monic p = x^n + a1 x^(n-1) + ... + an.
/// The result has no root variables left (root exponents are all zero).
MultiPoly substitute_coefficients(const MultiPoly& reduced, const UniPoly& monic_p);

struct DistinctValues {
  std::size_t m = 0;
  std::size_t stabilizer_order = 0;
};

/// Number of distinct images of f under S_n (full canonical comparison) and
/// the order of the stabilizer of f. n <= 5.
DistinctValues distinct_values_count(const MultiPoly& f, int n);

}  // namespace galoisrad
