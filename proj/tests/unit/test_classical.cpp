#include "galoisrad/classical.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"

using namespace galoisrad;

namespace {

Rational R(long n, long d = 1) { return make_rational(n, d); }

/// Index-free multiset comparison of numeric values against numeric_roots
/// of the squarefree part, counting multiplicities through the full list.
bool same_multiset(const std::vector<ApproxComplex>& got, const UniPoly& p, int prec) {
  std::vector<ApproxComplex> want;
  for (const auto& f : factor_over_Q(p).factors) {
    auto rs = numeric_roots(f.poly, prec);
    for (int m = 0; m < f.multiplicity; ++m) want.insert(want.end(), rs.begin(), rs.end());
  }
  if (want.size() != got.size()) return false;
  std::vector<bool> used(want.size(), false);
  BigFloat tol = BigFloat::pow2(-prec / 4, prec);
  for (const auto& g : got) {
    bool found = false;
    for (std::size_t i = 0; i < want.size(); ++i) {
      if (!used[i] && (want[i] - g).abs() < tol) {
        used[i] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<ApproxComplex> eval_all(const auto& exprs, int prec) {
  std::vector<ApproxComplex> out;
  for (const auto& e : exprs) out.push_back(e.eval(prec));
  return out;
}

}  // namespace

TEST_CASE("quadratic") {
  auto s = solve_quadratic(R(0), R(-1));
  CHECK(s.roots[0].eval().re().to_fixed(20) == "1.00000000000000000000");
  CHECK(s.roots[1].eval().re().to_fixed(20) == "-1.00000000000000000000");
  CHECK(s.min_poly == UniPoly::from_ints({-4, 0, 1}));
  CHECK(solve_quadratic(R(2), R(3)).min_poly == UniPoly::from_ints({8, 0, 1}));
  auto t = solve_quadratic(R(-3), R(2));
  UniPoly p = UniPoly::from_ints({2, -3, 1});
  CHECK(t.roots[0].eval().re().to_fixed(10) == "2.0000000000");
  CHECK(t.roots[1].eval().re().to_fixed(10) == "1.0000000000");
  for (const auto& r : t.roots) CHECK(verify_root(p, r));
}

TEST_CASE("depression") {
  CubicShift c1 = depress_cubic(R(1), R(3), R(3));
  CHECK(c1.shift == 1);
  CHECK(c1.a == 0);
  CHECK(c1.b == 0);
  CubicShift c2 = depress_cubic(R(-7), R(5), R(0));
  CHECK(c2.shift == 0);
  CHECK(c2.a == 5);
  CHECK(c2.b == 7);
  CubicShift c3 = depress_cubic(R(4), R(9), R(6));
  CHECK(c3.a == -3);
  CHECK(c3.b == -2);
}

TEST_CASE("Cardano examples") {
  auto s = cardano_roots({R(0), R(8)});
  CHECK(s.roots[0].eval().re().to_fixed(20) == "2.00000000000000000000");
  CHECK(s.roots[0].eval().im().to_fixed(20) == "0.00000000000000000000");
  auto t = cardano_roots({R(1), R(2)});
  CHECK(t.roots[0].eval().re().to_fixed(40) == "1.0000000000000000000000000000000000000000");
  auto u = cardano_roots({R(-6), R(-9)});
  CHECK(u.negative_branch);
  UniPoly p = DepressedCubic{R(-6), R(-9)}.poly();
  for (const auto& r : u.roots) CHECK(verify_root(p, r));
  // x^3 - 6x + 9 = (x + 3)(x^2 - 3x + 3)
  CHECK(std::any_of(u.roots.begin(), u.roots.end(),
                    [](const RadicalExpr& e) { return e.eval().re().to_fixed(20) == "-3.00000000000000000000"; }));
}

TEST_CASE("property: Cardano residuals, Euler pairing, and root sets") {
  std::mt19937 rng(1729);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 6);
  const int prec = 256;
  BigFloat tol = residual_tolerance(prec);
  for (int trial = 0; trial < 60; ++trial) {
    DepressedCubic c{R(num(rng), den(rng)), R(num(rng), den(rng))};
    auto sol = cardano_roots(c, prec);
    UniPoly p = c.poly();
    ApproxComplex third_a(Rational(c.a / 3), prec);
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(p.eval(sol.roots[k].eval(prec)).abs() < tol);
      CHECK((sol.y[k].eval(prec) * sol.z[k].eval(prec) - third_a).abs() < tol);
    }
    CHECK(same_multiset(eval_all(sol.roots, prec), p, prec));
  }
}

TEST_CASE("general cubic shifts back") {
  // u^3 + 6u^2 + 9u + 4 = (u + 1)^2 (u + 4)
  auto r = solve_cubic(R(4), R(9), R(6));
  UniPoly p = UniPoly::from_ints({4, 9, 6, 1});
  CHECK(same_multiset(eval_all(r, 256), p, 256));
  // Perfect cube (u + 1)^3 collapses to x^3 = 0.
  auto triple = solve_cubic(R(1), R(3), R(3));
  for (const auto& e : triple) CHECK(e.eval().re().to_fixed(20) == "-1.00000000000000000000");
}

TEST_CASE("cubic resolvent") {
  CHECK(cubic_resolvent({R(3), R(2)}) == UniPoly::from_ints({-1, -2, 1}));
  CHECK(cubic_resolvent({R(0), R(5)}) == UniPoly::from_ints({0, -5, 1}));
}

TEST_CASE("Lagrange resolvents") {
  const int n = 3;
  MultiPoly x1 = MultiPoly::root(n, 1, 1), x2 = MultiPoly::root(n, 1, 2), x3 = MultiPoly::root(n, 1, 3);
  CHECK(lagrange_rho(3, 3) == x1 + x2 + x3);
  // beta_3 = (e1/3)^3 vanishes on depressed cubics (e1 = 0).
  MultiPoly b3 = lagrange_beta(3, 3);
  UniPoly depressed = UniPoly::from_ints({-5, 2, 0, 1});
  CHECK(substitute_coefficients(symmetric_reduce(b3), depressed).is_zero());

  MultiPoly b1 = lagrange_beta(1, 2);
  MultiPoly d = MultiPoly::root(2, 1, 2) - MultiPoly::root(2, 1, 1);
  CHECK(b1 == Rational(1, 4) * d * d);
  UniPoly quad = UniPoly::from_ints({7, 3, 1});  // x^2 + a1 x + a2 with a1 = 3, a2 = 7
  CHECK(substitute_coefficients(symmetric_reduce(b1), quad).constant_term() == Rational(9 - 28, 4));

  // beta_1 beta_2 reduces to -a^3/27 and beta_1 + beta_2 to b on x^3 + a x = b.
  MultiPoly prod = lagrange_beta(1, 3) * lagrange_beta(2, 3);
  prod = prod.reduce_param_mod(0, UniPoly::from_ints({1, 1, 1}));
  MultiPoly sum = lagrange_beta(1, 3) + lagrange_beta(2, 3);
  for (auto [a, b] : std::vector<std::pair<long, long>>{{3, 2}, {-6, 1}, {5, -7}}) {
    DepressedCubic c{R(a), R(b)};
    MultiPoly vp = substitute_coefficients(symmetric_reduce(prod), c.poly());
    MultiPoly vs = substitute_coefficients(symmetric_reduce(sum), c.poly());
    CHECK(vp.is_constant());
    CHECK(vp.constant_term() == R(-a * a * a, 27));
    CHECK(vs.constant_term() == b);
    UniPoly res = cubic_resolvent(c);
    CHECK(res[0] == vp.constant_term());
    CHECK(res[1] == -vs.constant_term());
  }
  CHECK_THROWS_AS(lagrange_rho(1, 6), MathError);
}

TEST_CASE("quartic examples") {
  const int prec = 256;
  UniPoly p1 = UniPoly::from_ints({-1, 0, 0, 0, 1});
  auto r1 = solve_quartic(R(-1), R(0), R(0), R(0), prec);
  CHECK(same_multiset(eval_all(r1, prec), p1, prec));

  UniPoly p2 = UniPoly::from_ints({1, 0, -10, 0, 1});
  auto r2 = solve_quartic(R(1), R(0), R(-10), R(0), prec);
  for (const auto& e : r2) CHECK(verify_root(p2, e, prec));
  CHECK(same_multiset(eval_all(r2, prec), p2, prec));
  // sqrt 2 + sqrt 3 is among them.
  BigFloat s = sqrt(BigFloat(2, prec)) + sqrt(BigFloat(3, prec));
  bool found = std::any_of(r2.begin(), r2.end(), [&](const RadicalExpr& e) {
    return (e.eval(prec) - ApproxComplex(s, BigFloat(prec))).abs() < residual_tolerance(prec);
  });
  CHECK(found);

  UniPoly p3 = UniPoly::from_ints({4, 0, 4, 0, 1});
  auto r3 = solve_quartic(R(4), R(0), R(4), R(0), prec);
  CHECK(same_multiset(eval_all(r3, prec), p3, prec));
}

TEST_CASE("property: quartic residuals and root multisets") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<long> num(-12, 12);
  const int prec = 256;
  for (int trial = 0; trial < 40; ++trial) {
    Rational a0 = R(num(rng)), a1 = R(num(rng)), a2 = R(num(rng)), a3 = R(num(rng), 1 + trial % 3);
    UniPoly p({a0, a1, a2, a3, R(1)});
    auto roots = solve_quartic(a0, a1, a2, a3, prec);
    for (const auto& e : roots) CHECK(verify_root(p, e, prec));
    CHECK(same_multiset(eval_all(roots, prec), p, prec));
  }
}

TEST_CASE("dispatch by degree") {
  UniPoly lin = UniPoly::from_ints({3, 2});
  auto r = solve_by_radicals(lin);
  REQUIRE(r.size() == 1);
  CHECK(r[0].value() == R(-3, 2));
  CHECK(solve_by_radicals(UniPoly::from_ints({1, 0, 1})).size() == 2);
  CHECK_THROWS_AS(solve_by_radicals(UniPoly::from_ints({1, 0, 0, 0, 0, 1})), MathError);
}
