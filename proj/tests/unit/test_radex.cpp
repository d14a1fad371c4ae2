#include "galoisrad/radex.hpp"

#include <random>

#include "doctest.h"

using namespace galoisrad;

namespace {

RadicalExpr q(long n, long d = 1) { return RadicalExpr::rational(make_rational(n, d)); }

RadicalExpr random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
  std::uniform_int_distribution<long> num(-9, 9);
  switch (pick(rng)) {
    case 0:
      return q(num(rng), 1 + std::abs(num(rng)));
    case 1:
      return RadicalExpr::root_of_unity(1 + std::abs(num(rng)), std::abs(num(rng)));
    case 2:
      return random_expr(rng, depth - 1) + random_expr(rng, depth - 1);
    case 3:
      return random_expr(rng, depth - 1) - random_expr(rng, depth - 1);
    case 4:
      return random_expr(rng, depth - 1) * random_expr(rng, depth - 1);
    case 5:
      return random_expr(rng, depth - 1) / q(1 + std::abs(num(rng)));
    default: {
      long k = 2 + std::abs(num(rng)) % 3;
      return RadicalExpr::kth_root(k, random_expr(rng, depth - 1), std::abs(num(rng)) % k);
    }
  }
}

}  // namespace

TEST_CASE("evaluation") {
  CHECK(RadicalExpr::sqrt(q(2)).eval(128).re().to_fixed(8) == "1.41421356");
  ApproxComplex z = RadicalExpr::root_of_unity(3, 1).eval(128);
  CHECK(z.re().to_fixed(7) == "-0.5000000");
  CHECK(z.im().to_fixed(7) == "0.8660254");
  CHECK(RadicalExpr::kth_root(3, q(8), 0).eval().re().to_fixed(10) == "2.0000000000");
  ApproxComplex branch = RadicalExpr::kth_root(2, q(4), 1).eval();
  CHECK(branch.re().to_fixed(10) == "-2.0000000000");
  CHECK_THROWS_AS((q(1) / (q(1) - q(1))).eval(), MathError);
  CHECK_THROWS_AS(q(1) / q(0), MathError);
  CHECK_THROWS_AS(RadicalExpr::kth_root(1, q(2)), MathError);
  CHECK_THROWS_AS(RadicalExpr::kth_root(2, q(2), 2), MathError);
}

TEST_CASE("root verification") {
  UniPoly p = UniPoly::from_ints({-2, 0, 1});
  CHECK(verify_root(p, RadicalExpr::sqrt(q(2))));
  CHECK_FALSE(verify_root(p, q(1)));
  CHECK_FALSE(verify_root(p, q(1) / (q(2) - q(2))));
}

TEST_CASE("format") {
  CHECK(RadicalExpr::sqrt(q(2)).format() == "root(2, 2, 0)");
  CHECK(RadicalExpr::root_of_unity(3, 1).format() == "zeta(3,1)");
  CHECK(((q(-1) + RadicalExpr::sqrt(q(5))) / q(2)).format() == "((-1 + root(2, 5, 0)) / 2)");
  CHECK((q(1, 2) * q(-3)).format() == "(1/2 * -3)");
  CHECK(RadicalExpr().format() == "0");
}

TEST_CASE("parse") {
  RadicalExpr e = RadicalExpr::parse("((-1 + root(2, 5, 0)) / 2)");
  CHECK(e == (q(-1) + RadicalExpr::sqrt(q(5))) / q(2));
  CHECK(RadicalExpr::parse(" zeta( 5 , 2 ) ") == RadicalExpr::root_of_unity(5, 2));
  CHECK(RadicalExpr::parse("(1 - -2/4)") == q(1) - q(-1, 2));
  CHECK_FALSE(RadicalExpr::parse("(1 + 2)") == RadicalExpr::parse("(2 + 1)"));
  try {
    RadicalExpr::parse("(1 + )");
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.position() == 5);
  }
  CHECK_THROWS_AS(RadicalExpr::parse("root(2, 3)"), ParseError);
  CHECK_THROWS_AS(RadicalExpr::parse("(1 / 0)"), ParseError);
  CHECK_THROWS_AS(RadicalExpr::parse("1 2"), ParseError);
  CHECK_THROWS_AS(RadicalExpr::parse("root(2, 3, 2)"), ParseError);
}

TEST_CASE("property: format and parse round trip") {
  std::mt19937 rng(606);
  for (int trial = 0; trial < 200; ++trial) {
    RadicalExpr e = random_expr(rng, 4);
    RadicalExpr back = RadicalExpr::parse(e.format());
    CHECK(back == e);
    CHECK(back.format() == e.format());
  }
}

TEST_CASE("property: doubling precision changes the value by less than the coarse tolerance") {
  std::mt19937 rng(99);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    RadicalExpr e = random_expr(rng, 4);
    try {
      ApproxComplex lo = e.eval(128);
      ApproxComplex hi = e.eval(256);
      // The absolute error scales with the magnitude of the value.
      BigFloat scale = lo.abs() + BigFloat(1, 256);
      CHECK((hi - lo).abs() < residual_tolerance(128) * scale);
      ++checked;
    } catch (const MathError& err) {
      CHECK(err.code() == Errc::DivisionByZeroAtEval);
    }
  }
  CHECK(checked > 150);
}
