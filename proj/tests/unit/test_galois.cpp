#include "galoisrad/galois.hpp"

#include <random>

#include "galoisrad/classical.hpp"
#include "doctest.h"
#include "relation_oracle.hpp"

using namespace galoisrad;

namespace {

Rational R(long n, long d = 1) { return make_rational(n, d); }

std::size_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::size_t>(n) * factorial(n - 1); }

void check_group_shape(const UniPoly& p, const GaloisGroupResult& g) {
  const int n = p.degree();
  CHECK(g.group.contains(Permutation::identity(n)));
  CHECK(PermGroup::closure(n, g.group.elements()).order() == g.group.order());
  CHECK(static_cast<std::size_t>(g.resolvent.factor_of_phi1.degree()) == g.group.order());
  CHECK(factorial(n) % g.group.order() == 0);
  CHECK(divides(g.resolvent.factor_of_phi1, g.resolvent.R));
  CHECK(g.resolvent.R.degree() == static_cast<int>(factorial(n)));
  CHECK(g.resolvent.R.is_monic());
  if (is_irreducible(p)) CHECK(g.group.order() % static_cast<std::size_t>(n) == 0);
}

}  // namespace

TEST_CASE("alpha selection") {
  CHECK(choose_alpha(UniPoly::from_ints({-2, 0, 1})) == 2);
  CHECK(choose_alpha(UniPoly::from_ints({-1, -1, 1})) == 2);
  CHECK(choose_alpha(UniPoly::from_ints({-7, 3, 0, 1}), R(10)) == 10);
  CHECK(choose_alpha(UniPoly::from_ints({-7, 3, 0, 1}), R(7, 2)) == 4);
}

TEST_CASE("exact resolvent of a quadratic with alpha = -1") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
  for (int trial = 0; trial < 10; ++trial) {
    Rational a = R(num(rng), den(rng)), b = R(num(rng), den(rng));
    UniPoly R2 = exact_resolvent_poly(UniPoly({b, a, Rational(1)}), FundamentalFunction{2, R(-1)});
    CHECK(R2 == UniPoly({Rational(4 * b - a * a), Rational(0), Rational(1)}));
  }
  CHECK(exact_resolvent_poly(UniPoly::from_ints({-2, 0, 1}), FundamentalFunction{2, R(2)}) ==
        UniPoly::from_ints({-2, 0, 1}));
  CHECK_THROWS_AS(exact_resolvent_poly(UniPoly::from_ints({1, 0, 0, 0, 0, 1}), FundamentalFunction{5, R(2)}),
                  MathError);
}

TEST_CASE("exact resolvent agrees with the numeric product") {
  for (const auto& p : {UniPoly::from_ints({-5, 1, 2, 1}), UniPoly({R(1, 2), R(0), R(-3), R(1)}),
                        UniPoly::from_ints({3, 1, 0, 0, 1})}) {
    const int n = p.degree();
    const int prec = 384;
    UniPoly Rp = exact_resolvent_poly(p, FundamentalFunction{n, R(3)});
    auto roots = numeric_roots(p, prec);
    auto phis = kernels::phi_values(roots, R(3), all_permutations(n), Exec::Serial);
    std::vector<ApproxComplex> c{ApproxComplex(R(1), prec)};
    for (const auto& r : phis) {
      std::vector<ApproxComplex> nxt(c.size() + 1, ApproxComplex(prec));
      for (std::size_t k = 0; k < c.size(); ++k) {
        nxt[k + 1] = nxt[k + 1] + c[k];
        nxt[k] = nxt[k] - r * c[k];
      }
      c = nxt;
    }
    for (int k = 0; k <= Rp.degree(); ++k) {
      BigFloat scale = abs(BigFloat(Rp[k], prec)) + BigFloat(1, prec);
      CHECK((c[static_cast<std::size_t>(k)] - ApproxComplex(Rp[k], prec)).abs() < BigFloat::pow2(-prec / 2, prec) * scale);
    }
  }
}

TEST_CASE("Galois group examples") {
  auto g2 = galois_group(UniPoly::from_ints({-2, 0, 1}));
  CHECK(g2.group.order() == 2);
  CHECK(g2.alpha == 2);

  UniPoly q4 = UniPoly::from_ints({-2, 0, 0, 0, 1});
  auto g4 = galois_group(q4);
  CHECK(g4.group.order() == 8);
  check_group_shape(q4, g4);
  CHECK(g4.group.elements() == oracle::relation_preserving_perms(g4.roots, 256));

  UniPoly v4 = UniPoly::from_ints({1, 0, -10, 0, 1});
  auto gv = galois_group(v4);
  CHECK(gv.group.order() == 4);
  CHECK(gv.group.elements() == oracle::relation_preserving_perms(gv.roots, 256));

  UniPoly c3 = UniPoly::from_ints({-1, -3, 0, 1});
  auto g3 = galois_group(c3);
  CHECK(g3.group == named_group(GroupKind::Alternating, 3));

  UniPoly split = UniPoly::from_ints({4, 0, -5, 0, 1});
  auto gt = galois_group(split);
  CHECK(gt.group.is_trivial());
  CHECK(static_cast<int>(gt.resolvent.factor_of_phi1.degree()) == 1);
}

TEST_CASE("property: groups of random cubics match the discriminant and the oracle") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<long> num(-9, 9);
  int checked = 0;
  for (int trial = 0; trial < 25; ++trial) {
    UniPoly p({R(num(rng)), R(num(rng)), R(num(rng), 1 + trial % 2), R(1)});
    if (!is_squarefree(p)) continue;
    auto g = galois_group(p);
    check_group_shape(p, g);
    CHECK(g.group.elements() == oracle::relation_preserving_perms(g.roots, 256));
    if (is_irreducible(p)) {
      bool square_disc = is_perfect_square(discriminant(p)).has_value();
      CHECK(g.group.order() == (square_disc ? 3u : 6u));
    }
    ++checked;
  }
  CHECK(checked > 15);
}

TEST_CASE("group does not depend on the valid alpha chosen") {
  for (const auto& p : {UniPoly::from_ints({-2, 0, 0, 0, 1}), UniPoly::from_ints({-1, -3, 0, 1}),
                        UniPoly::from_ints({1, 1, 1, 1, 1})}) {
    auto base = galois_group(p);
    GaloisOptions opts;
    opts.alpha = base.alpha + 3;
    auto other = galois_group(p, opts);
    CHECK(other.group == base.group);
  }
}

TEST_CASE("input guards") {
  CHECK_THROWS_AS(galois_group(UniPoly::from_ints({-1, 0, 0, 0, 0, 1})), MathError);
  try {
    galois_group(UniPoly::from_ints({1, -2, 1}));
    FAIL("expected NotSquarefree");
  } catch (const MathError& e) {
    CHECK(e.code() == Errc::NotSquarefree);
  }
  GaloisOptions collide;
  collide.alpha = R(1);
  try {
    galois_group(UniPoly::from_ints({-2, 0, 1}), collide);
    FAIL("expected AlphaCollision");
  } catch (const MathError& e) {
    CHECK(e.code() == Errc::AlphaCollision);
  }
}

TEST_CASE("biquadratic tower") {
  auto r = biquadratic_chain(R(0), R(-2));
  CHECK(r.group.order() == 8);
  CHECK(r.series.indexes == std::vector<std::size_t>{2, 2, 2});
  REQUIRE(r.series.chain.size() == 4);
  CHECK(r.series.chain[0].order() == 1);
  CHECK(r.series.chain[1].order() == 2);
  CHECK(r.series.chain[2].order() == 4);
  CHECK(r.tower.size() == 3);
  CHECK(r.tower[0].relation == "xi1^2 = 8");
  CHECK(r.tower[1].relation == "2*xi2^2 = xi1");
  CHECK(r.solvable);
  UniPoly p = UniPoly::from_ints({-2, 0, 0, 0, 1});
  REQUIRE(r.radical_roots);
  for (const auto& e : *r.radical_roots) CHECK(verify_root(p, e));
  for (std::size_t i = 1; i < r.series.chain.size(); ++i) CHECK(is_normal(r.series.chain[i - 1], r.series.chain[i]));

  auto v = biquadratic_chain(R(-10), R(1));
  CHECK(v.group.order() == 4);
  CHECK(v.series.indexes == std::vector<std::size_t>{2, 2});
  CHECK(v.group.elements() == oracle::relation_preserving_perms(v.roots, 256));

  auto t = biquadratic_chain(R(-5), R(4));
  CHECK(t.group.is_trivial());
  CHECK(t.series.indexes.empty());
  CHECK(t.tower.empty());
  CHECK((*t.radical_roots)[0] == RadicalExpr::integer(2));

  CHECK_THROWS_AS(biquadratic_chain(R(4), R(4)), MathError);
  CHECK_THROWS_AS(biquadratic_chain(R(1), R(0)), MathError);
}

TEST_CASE("property: tower and resolvent agree on the group order") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<long> num(-12, 12);
  int checked = 0;
  while (checked < 20) {
    Rational a = R(num(rng)), b = R(num(rng));
    if (b == 0 || a * a == 4 * b) continue;
    auto tower = biquadratic_chain(a, b);
    auto direct = galois_group(UniPoly({b, Rational(0), a, Rational(0), Rational(1)}));
    CHECK(tower.group.order() == direct.group.order());
    CHECK(tower.solvable);
    ++checked;
  }
}

TEST_CASE("solvability reports") {
  auto q = solvability_report(UniPoly::from_ints({1, 1, 1}));
  CHECK(q.solvable);
  CHECK(q.group.order() == 2);
  CHECK(q.series.indexes == std::vector<std::size_t>{2});
  CHECK(q.method == "resolvent");
  REQUIRE(q.radical_roots);
  CHECK(q.radical_roots->size() == 2);

  auto b = solvability_report(UniPoly::from_ints({-2, 0, 0, 0, 1}));
  CHECK(b.method == "biquadratic");
  CHECK(b.series.indexes == std::vector<std::size_t>{2, 2, 2});

  auto s4 = solvability_report(UniPoly::from_ints({3, 1, 0, 0, 1}));
  CHECK(s4.group.order() == 24);
  CHECK(s4.series.indexes == std::vector<std::size_t>{2, 3, 2, 2});
  CHECK(s4.solvable);
  for (const auto& e : *s4.radical_roots) CHECK(verify_root(UniPoly::from_ints({3, 1, 0, 0, 1}), e));

  auto s5 = solvability_report_for_group(named_group(GroupKind::Symmetric, 5));
  CHECK_FALSE(s5.solvable);
  CHECK(s5.series.indexes == std::vector<std::size_t>{2, 60});
}

TEST_CASE("property: every polynomial of degree <= 4 is solvable") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<long> num(-5, 5);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 1 + trial % 4;
    std::vector<Rational> c;
    for (int i = 0; i < n; ++i) c.push_back(R(num(rng)));
    c.push_back(R(1));
    UniPoly p(c);
    if (!is_squarefree(p)) continue;
    auto rep = solvability_report(p);
    CHECK(rep.solvable);
    for (std::size_t k : rep.series.indexes) CHECK(is_prime_small(k));
  }
}
