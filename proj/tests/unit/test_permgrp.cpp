#include "galoisrad/permgrp.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"

using namespace galoisrad;

namespace {

Permutation cyc(const char* s, int n) { return Permutation::parse(s, n); }

PermGroup gen(int n, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> g;
  for (const char* c : cycles) g.push_back(cyc(c, n));
  return PermGroup::closure(n, g);
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("permutation basics") {
  CHECK((cyc("(12)", 3) * cyc("(13)", 3)) == cyc("(132)", 3));
  CHECK(cyc("(1423)", 4).sign() == -1);
  CHECK(cyc("(12)(34)", 4).images() == std::vector<int>{2, 1, 4, 3});
  CHECK(cyc("(34)", 4).to_cycle_string() == "(1)(2)(34)");
  CHECK(cyc("(1,10)(2,3)", 10).to_cycle_string() == "(1,10)(2,3)(4)(5)(6)(7)(8)(9)");
  CHECK(cyc("(123)", 3).inverse() == cyc("(132)", 3));
  CHECK(cyc("(123)(45)", 5).order() == 6);
  CHECK(Permutation::max_point("(12)(46)") == 6);
  CHECK(cyc("(1)(2)(3)", 3).is_identity());

  CHECK_THROWS_AS(cyc("(12", 3), MathError);
  CHECK_THROWS_AS(cyc("(1a)", 3), MathError);
  CHECK_THROWS_AS(cyc("(121)", 3), MathError);
  try {
    cyc("(15)", 4);
    FAIL("expected PointOutOfRange");
  } catch (const MathError& e) {
    CHECK(e.code() == Errc::PointOutOfRange);
  }
  CHECK_THROWS(Permutation({1, 1, 2}));
}

TEST_CASE("property: parity is a homomorphism and conjugation preserves order") {
  auto all = all_permutations(5);
  std::mt19937 rng(4);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    const auto& s = all[pick(rng)];
    const auto& t = all[pick(rng)];
    CHECK((s * t).sign() == s.sign() * t.sign());
    CHECK(conjugate(t, s).order() == t.order());
    CHECK(Permutation::parse(s.to_cycle_string(), 5) == s);
  }
}

TEST_CASE("closure") {
  PermGroup v4 = gen(4, {"(12)(34)", "(13)(24)"});
  CHECK(v4.order() == 4);
  CHECK(v4.cycle_strings() == std::vector<std::string>{"(1)(2)(3)(4)", "(12)(34)", "(13)(24)", "(14)(23)"});
  CHECK(PermGroup::closure(4, {}).order() == 1);
  CHECK(gen(5, {"(12345)"}).order() == 5);
  PermGroup idem = PermGroup::closure(4, v4.elements());
  CHECK(idem == v4);
}

TEST_CASE("named groups") {
  CHECK(named_group(GroupKind::Symmetric, 4).order() == 24);
  CHECK(named_group(GroupKind::Alternating, 4).order() == 12);
  CHECK(named_group(GroupKind::KleinFour, 4) == gen(4, {"(12)(34)", "(13)(24)"}));
  CHECK(named_group(GroupKind::Cyclic, 6).order() == 6);
  CHECK(named_group(GroupKind::Identity, 3).is_trivial());
  CHECK(named_group(GroupKind::Alternating, 5).order() == 60);
  CHECK_THROWS_AS(named_group(GroupKind::Symmetric, 7), MathError);
  CHECK_THROWS_AS(named_group(GroupKind::KleinFour, 5), MathError);
}

TEST_CASE("normality and index") {
  PermGroup s4 = named_group(GroupKind::Symmetric, 4);
  PermGroup a4 = named_group(GroupKind::Alternating, 4);
  CHECK(is_normal(a4, s4));
  CHECK(index(a4, s4) == 2);
  PermGroup s3 = named_group(GroupKind::Symmetric, 3);
  CHECK_FALSE(is_normal(gen(3, {"(12)"}), s3));
  CHECK(is_normal(s3, s3));
  CHECK(index(s3, s3) == 1);
  try {
    is_normal(gen(4, {"(1234)"}), a4);
    FAIL("expected NotASubgroup");
  } catch (const MathError& e) {
    CHECK(e.code() == Errc::NotASubgroup);
  }
}

TEST_CASE("subgroup enumeration") {
  CHECK(all_subgroups(named_group(GroupKind::KleinFour, 4)).size() == 5);
  CHECK(all_subgroups(named_group(GroupKind::Cyclic, 5)).size() == 2);
  CHECK(all_subgroups(named_group(GroupKind::Symmetric, 3)).size() == 6);
  CHECK(all_subgroups(named_group(GroupKind::Symmetric, 4)).size() == 30);
  CHECK(all_subgroups(named_group(GroupKind::Alternating, 4)).size() == 10);
  for (const auto& h : all_subgroups(named_group(GroupKind::Symmetric, 4))) CHECK(24 % h.order() == 0);
  CHECK_THROWS_AS(all_subgroups(named_group(GroupKind::Symmetric, 6)), MathError);
}

TEST_CASE("composition series") {
  PermGroup s4 = named_group(GroupKind::Symmetric, 4);
  CompositionSeries cs = composition_series(s4);
  CHECK(cs.indexes == std::vector<std::size_t>{2, 3, 2, 2});
  REQUIRE(cs.chain.size() == 5);
  CHECK(cs.chain[0].is_trivial());
  CHECK(cs.chain[1].order() == 2);
  CHECK(cs.chain[1].cycle_strings() == std::vector<std::string>{"(1)(2)(3)(4)", "(12)(34)"});
  CHECK(cs.chain[2] == named_group(GroupKind::KleinFour, 4));
  CHECK(cs.chain[3] == named_group(GroupKind::Alternating, 4));
  for (std::size_t i = 0; i + 1 < cs.chain.size(); ++i) CHECK(is_normal(cs.chain[i], cs.chain[i + 1]));
  CHECK(is_solvable(s4));

  PermGroup d4 = gen(4, {"(1324)", "(12)"});
  CHECK(d4.order() == 8);
  CHECK(composition_series(d4).indexes == std::vector<std::size_t>{2, 2, 2});

  CompositionSeries triv = composition_series(PermGroup::trivial(3));
  CHECK(triv.indexes.empty());
  CHECK(triv.length() == 0);

  CHECK(is_solvable(named_group(GroupKind::Cyclic, 5)));
}

TEST_CASE("S5 and A5") {
  PermGroup s5 = named_group(GroupKind::Symmetric, 5);
  CompositionSeries cs = composition_series(s5);
  CHECK(cs.indexes == std::vector<std::size_t>{2, 60});
  CHECK_FALSE(is_solvable(s5));
  auto normals = normal_subgroups(named_group(GroupKind::Alternating, 5));
  CHECK(normals.size() == 2);
}

TEST_CASE("quotients") {
  PermGroup s4 = named_group(GroupKind::Symmetric, 4);
  CHECK(quotient_group(s4, named_group(GroupKind::Alternating, 4)).order() == 2);
  QuotientGroup gg = quotient_group(s4, s4);
  CHECK(gg.order() == 1);
  CHECK(gg.representatives[0].is_identity());
  PermGroup v4 = named_group(GroupKind::KleinFour, 4);
  QuotientGroup q = quotient_group(v4, gen(4, {"(12)(34)"}));
  CHECK(q.order() == 2);
  CHECK(q.table == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(quotient_group(named_group(GroupKind::Symmetric, 3), gen(3, {"(12)"})), MathError);
}

TEST_CASE("Jordan-Holder") {
  CHECK(jordan_holder_invariants(named_group(GroupKind::Symmetric, 4)) == std::vector<std::size_t>{2, 2, 2, 3});
  auto v4_series = all_composition_series(named_group(GroupKind::KleinFour, 4));
  CHECK(v4_series.size() == 3);
  for (const auto& s : v4_series) CHECK(sorted(s.indexes) == std::vector<std::size_t>{2, 2});
  auto c6_series = all_composition_series(named_group(GroupKind::Cyclic, 6));
  CHECK(c6_series.size() == 2);
  for (const auto& s : c6_series) CHECK(sorted(s.indexes) == std::vector<std::size_t>{2, 3});
  for (const auto& s : all_composition_series(named_group(GroupKind::Symmetric, 4)))
    CHECK(sorted(s.indexes) == std::vector<std::size_t>{2, 2, 2, 3});
}
