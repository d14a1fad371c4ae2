#include "galoisrad/mpoly.hpp"

#include <random>

#include "doctest.h"
#include "galoisrad/cyclo.hpp"

using namespace galoisrad;

namespace {

MultiPoly x(int n, int i, int np = 0) { return MultiPoly::root(n, np, i); }
MultiPoly c(int n, long v, int np = 0) { return MultiPoly::constant(n, np, make_rational(v)); }

// e-form monomial e1^a e2^b ... in the root slots.
MultiPoly e_mono(int n, std::initializer_list<int> mu, long coeff = 1) {
  std::vector<int> exps(mu);
  exps.resize(static_cast<std::size_t>(n));
  return MultiPoly::monomial(n, 0, exps, make_rational(coeff));
}

MultiPoly random_poly(std::mt19937& rng, int n, int terms, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::uniform_int_distribution<long> k(-5, 5);
  MultiPoly p(n, 0);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exps;
    for (int i = 0; i < n; ++i) exps.push_back(e(rng));
    p += MultiPoly::monomial(n, 0, exps, make_rational(k(rng)));
  }
  return p;
}

MultiPoly symmetrize(const MultiPoly& f) {
  MultiPoly s(f.nroots(), f.nparams());
  for (const auto& sigma : all_permutations(f.nroots())) s += f.apply_permutation(sigma);
  return s;
}

}  // namespace

TEST_CASE("arithmetic") {
  MultiPoly a = x(2, 1) + x(2, 2);
  MultiPoly b = x(2, 1) - x(2, 2);
  CHECK(a * b == x(2, 1).pow(2) - x(2, 2).pow(2));
  CHECK(a.pow(2) == x(2, 1).pow(2) + c(2, 2) * x(2, 1) * x(2, 2) + x(2, 2).pow(2));
  std::vector<Rational> at{make_rational(1), make_rational(2)};
  CHECK((x(2, 1) * x(2, 2)).evaluate(at) == 2);
  CHECK((x(2, 1) * x(2, 2)).substitute(0, make_rational(3)) == c(2, 3) * x(2, 2));
  CHECK(a.pow(2).to_string() == "x1^2 + 2*x1*x2 + x2^2");
  CHECK((c(2, 0) * a).is_zero());
  CHECK_THROWS_AS(x(2, 1) + x(3, 1), MathError);
  // Exponents are bytes: 2^8 must be rejected.
  CHECK_THROWS_AS(x(1, 1).pow(256), MathError);
}

TEST_CASE("permutation action") {
  CHECK((x(2, 1) - x(2, 2)).apply_permutation(Permutation::parse("(12)", 2)) == x(2, 2) - x(2, 1));
  MultiPoly s = x(3, 1) + x(3, 2) + x(3, 3);
  for (const auto& sigma : all_permutations(3)) CHECK(s.apply_permutation(sigma) == s);
  CHECK((x(3, 1).pow(2) * x(3, 2)).apply_permutation(Permutation::parse("(123)", 3)) == x(3, 2).pow(2) * x(3, 3));
}

TEST_CASE("property: permutation action is a group action") {
  std::mt19937 rng(11);
  auto perms = all_permutations(4);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    MultiPoly f = random_poly(rng, 4, 6, 3);
    const auto& s = perms[pick(rng)];
    const auto& t = perms[pick(rng)];
    CHECK(f.apply_permutation(s * t) == f.apply_permutation(t).apply_permutation(s));
  }
}

TEST_CASE("symmetry test") {
  CHECK(is_symmetric(x(3, 1) * x(3, 2) + x(3, 1) * x(3, 3) + x(3, 2) * x(3, 3)));
  CHECK_FALSE(is_symmetric(x(2, 1) - x(2, 2)));
  CHECK(is_symmetric(c(3, 5)));
  CHECK_FALSE(is_symmetric(x(3, 1) * x(3, 2).pow(2) + x(3, 2) * x(3, 3).pow(2) + x(3, 3) * x(3, 1).pow(2)));
}

TEST_CASE("symmetric reduction examples") {
  // p2 = e1^2 - 2 e2
  CHECK(symmetric_reduce(x(2, 1).pow(2) + x(2, 2).pow(2)) == e_mono(2, {2, 0}) - e_mono(2, {0, 1}, 2));
  CHECK(symmetric_reduce(x(2, 1) * x(2, 2)) == e_mono(2, {0, 1}));
  CHECK(symmetric_reduce(x(2, 1).pow(2) * x(2, 2) + x(2, 1) * x(2, 2).pow(2)) == e_mono(2, {1, 1}));
  CHECK(symmetric_reduce(c(3, 7)) == c(3, 7));
  CHECK_THROWS_AS(symmetric_reduce(x(2, 1)), MathError);
  try {
    symmetric_reduce(x(2, 1) - x(2, 2));
  } catch (const MathError& e) {
    CHECK(e.code() == Errc::NotSymmetric);
  }
}

TEST_CASE("property: reduction round trip") {
  std::mt19937 rng(123);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      MultiPoly f = symmetrize(random_poly(rng, n, 3, 4));
      MultiPoly g = symmetric_reduce(f);
      CHECK(expand_elementary(g) == f);
    }
  }
}

TEST_CASE("reduction with parameters and coefficient substitution") {
  // prod_i (y - x_i) = y^3 - e1 y^2 + e2 y - e3; with p = x^3 - 2x + 5 it is p(y).
  const int n = 3;
  MultiPoly y = MultiPoly::param(n, 1, 0);
  MultiPoly prod = MultiPoly::constant(n, 1, make_rational(1));
  for (int i = 1; i <= n; ++i) prod *= y - MultiPoly::root(n, 1, i);
  MultiPoly red = symmetric_reduce(prod);
  UniPoly p = UniPoly::from_ints({5, -2, 0, 1});
  MultiPoly sub = substitute_coefficients(red, p);
  for (int k = 0; k <= 3; ++k) CHECK(sub.coefficient_of_param(0, k).constant_term() == p[k]);
  CHECK(expand_elementary(red) == prod);
}

TEST_CASE("numeric cross-check of reduced power sums") {
  // p4 of the roots of x^3 - 3x + 1 through reduction equals Newton's value.
  MultiPoly p4 = x(3, 1).pow(4) + x(3, 2).pow(4) + x(3, 3).pow(4);
  UniPoly p = UniPoly::from_ints({1, -3, 0, 1});
  Rational via_reduce = substitute_coefficients(symmetric_reduce(p4), p).constant_term();
  CHECK(via_reduce == coefficients_to_power_sums(p, 4)[3]);
}

TEST_CASE("distinct values") {
  MultiPoly s = x(3, 1) + x(3, 2) + x(3, 3);
  DistinctValues dv = distinct_values_count(s, 3);
  CHECK(dv.m == 1);
  CHECK(dv.stabilizer_order == 6);
  DistinctValues d2 = distinct_values_count(x(3, 1) - x(3, 2), 3);
  CHECK(d2.m == 6);
  CHECK(d2.stabilizer_order == 1);
  DistinctValues d3 = distinct_values_count(x(4, 1) * x(4, 2) + x(4, 3) * x(4, 4), 4);
  CHECK(d3.m == 3);
  CHECK(d3.stabilizer_order == 8);
  CHECK_THROWS_AS(distinct_values_count(MultiPoly::root(6, 0, 1), 6), MathError);
}

TEST_CASE("Lagrange beta distinct values via a symbolic root of unity") {
  for (int n : {3, 5}) {
    UniPoly phi = cyclotomic_poly(n);
    MultiPoly zeta = MultiPoly::param(n, 1, 0);
    MultiPoly rho(n, 1);
    for (int i = 1; i <= n; ++i) rho += zeta.pow(static_cast<unsigned>(i)) * MultiPoly::root(n, 1, i);
    rho = rho.reduce_param_mod(0, phi);
    MultiPoly beta = MultiPoly::constant(n, 1, make_rational(1));
    for (int k = 0; k < n; ++k) beta = (beta * rho).reduce_param_mod(0, phi);
    DistinctValues dv = distinct_values_count(beta, n);
    CHECK(dv.stabilizer_order == static_cast<std::size_t>(n));
    CHECK(dv.m == (n == 3 ? 2u : 24u));
  }
}
