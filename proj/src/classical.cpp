#include "galoisrad/classical.hpp"

#include "galoisrad/cyclo.hpp"

namespace galoisrad {

namespace {

RadicalExpr lit(const Rational& r) { return RadicalExpr::rational(r); }

RadicalExpr zeta3(long power) { return RadicalExpr::root_of_unity(3, power); }

/// zeta_3^power * e, leaving e alone for power 0.
RadicalExpr rotate3(long power, const RadicalExpr& e) { return power % 3 == 0 ? e : zeta3(power) * e; }

RadicalExpr shifted(const RadicalExpr& e, const Rational& shift) { return shift == 0 ? e : e - lit(shift); }

}  // namespace

QuadraticSolution solve_quadratic(const Rational& a, const Rational& b) {
  QuadraticSolution s;
  Rational disc = a * a - 4 * b;
  s.v1 = RadicalExpr::sqrt(lit(disc));
  s.roots[0] = (lit(Rational(-a)) + s.v1) / lit(Rational(2));
  s.roots[1] = (lit(Rational(-a)) - s.v1) / lit(Rational(2));
  s.min_poly = UniPoly({Rational(4 * b - a * a), Rational(0), Rational(1)});
  return s;
}

UniPoly DepressedCubic::poly() const { return UniPoly({Rational(-b), a, Rational(0), Rational(1)}); }

CubicShift depress_cubic(const Rational& a0, const Rational& a1, const Rational& a2) {
  CubicShift c;
  c.shift = a2 / 3;
  c.a = a1 - a2 * a2 / 3;
  c.b = -a0 + a1 * a2 / 3 - 2 * a2 * a2 * a2 / 27;
  return c;
}

CardanoSolution cardano_roots(const DepressedCubic& c, int prec) {
  CardanoSolution sol;
  const Rational& a = c.a;
  const Rational& b = c.b;
  const Rational half_b = b / 2;
  const Rational third_a = a / 3;
  RadicalExpr s = RadicalExpr::sqrt(lit(Rational(a * a * a / 27 + b * b / 4)));
  RadicalExpr big_y = lit(half_b) + s;
  sol.negative_branch = a < 0;
  // a >= 0: x = y - z with z^3 = -b/2 + s; a < 0: x = y + w with w^3 = b/2 - s.
  RadicalExpr second = sol.negative_branch ? lit(half_b) - s : lit(Rational(-half_b)) + s;

  if (a != 0) {
    ApproxComplex y0 = RadicalExpr::kth_root(3, big_y).eval(prec);
    ApproxComplex target(sol.negative_branch ? Rational(-third_a) : third_a, prec);
    ApproxComplex radicand = second.eval(prec);
    BigFloat best(prec);
    for (long j = 0; j < 3; ++j) {
      BigFloat err = (y0 * kth_root(radicand, 3, j) - target).abs();
      if (j == 0 || err < best) {
        best = err;
        sol.pairing_branch = j;
      }
    }
  }

  RadicalExpr y_root = RadicalExpr::kth_root(3, big_y);
  RadicalExpr second_root = RadicalExpr::kth_root(3, second, sol.pairing_branch);
  for (long k = 0; k < 3; ++k) {
    sol.y[k] = rotate3(k, y_root);
    RadicalExpr w = rotate3(2 * k, second_root);
    if (sol.negative_branch) {
      sol.roots[k] = sol.y[k] + w;
      sol.z[k] = lit(Rational(-1)) * w;
    } else {
      sol.roots[k] = sol.y[k] - w;
      sol.z[k] = w;
    }
  }
  return sol;
}

std::array<RadicalExpr, 3> solve_cubic(const Rational& a0, const Rational& a1, const Rational& a2, int prec) {
  CubicShift sh = depress_cubic(a0, a1, a2);
  CardanoSolution sol = cardano_roots(sh.depressed(), prec);
  std::array<RadicalExpr, 3> out;
  for (std::size_t k = 0; k < 3; ++k) out[k] = shifted(sol.roots[k], sh.shift);
  return out;
}

UniPoly cubic_resolvent(const DepressedCubic& c) {
  return UniPoly({Rational(-(c.a * c.a * c.a) / 27), Rational(-c.b), Rational(1)});
}

MultiPoly lagrange_rho(int k, int n) {
  if (n < 1 || n > 5) fail(Errc::UnsupportedDegree, "Lagrange resolvents are provided for n <= 5");
  if (k < 1 || k > n) fail(Errc::InvalidArgument, "k must be in 1..n");
  MultiPoly zeta = MultiPoly::param(n, 1, 0);
  MultiPoly rho(n, 1);
  for (int i = 1; i <= n; ++i) rho += zeta.pow(static_cast<unsigned>((k * i) % n)) * MultiPoly::root(n, 1, i);
  return rho.reduce_param_mod(0, cyclotomic_poly(n));
}

MultiPoly lagrange_beta(int k, int n) {
  MultiPoly scaled = Rational(1, n) * lagrange_rho(k, n);
  UniPoly modulus = cyclotomic_poly(n);
  MultiPoly beta = MultiPoly::constant(n, 1, Rational(1));
  for (int i = 0; i < n; ++i) beta = (beta * scaled).reduce_param_mod(0, modulus);
  return beta;
}

std::array<RadicalExpr, 4> solve_quartic(const Rational& a0, const Rational& a1, const Rational& a2, const Rational& a3,
                                         int prec) {
  // x = t - a3/4 gives t^4 + p t^2 + q t + r.
  const Rational h = a3 / 4;
  const Rational p = a2 - 3 * a3 * a3 / 8;
  const Rational q = a1 - a2 * a3 / 2 + a3 * a3 * a3 / 8;
  const Rational r = a0 - a1 * a3 / 4 + a2 * a3 * a3 / 16 - 3 * a3 * a3 * a3 * a3 / 256;
  std::array<RadicalExpr, 4> t;
  const RadicalExpr two = lit(Rational(2));

  if (q == 0) {
    RadicalExpr sq = RadicalExpr::sqrt(lit(Rational(p * p - 4 * r)));
    RadicalExpr u1 = (lit(Rational(-p)) + sq) / two;
    RadicalExpr u2 = (lit(Rational(-p)) - sq) / two;
    t = {RadicalExpr::sqrt(u1, 0), RadicalExpr::sqrt(u1, 1), RadicalExpr::sqrt(u2, 0), RadicalExpr::sqrt(u2, 1)};
  } else {
    // (t^2 + m)^2 = (2m - p) t^2 - q t + m^2 - r is a square in t exactly
    // when m solves the resolvent cubic below.
    auto ms = solve_cubic(Rational(p * r / 2 - q * q / 8), Rational(-r), Rational(-p / 2), prec);
    std::size_t pick = 0;
    BigFloat best(prec);
    for (std::size_t i = 0; i < 3; ++i) {
      BigFloat mag = (ApproxComplex(Rational(2), prec) * ms[i].eval(prec) - ApproxComplex(p, prec)).abs();
      if (i == 0 || mag > best) {
        best = mag;
        pick = i;
      }
    }
    const RadicalExpr& m = ms[pick];
    RadicalExpr s = RadicalExpr::sqrt(two * m - lit(p));
    RadicalExpr base = lit(Rational(-p)) - two * m;
    RadicalExpr corr = lit(Rational(2 * q)) / s;
    RadicalExpr d1 = RadicalExpr::sqrt(base - corr);
    RadicalExpr d2 = RadicalExpr::sqrt(base + corr);
    RadicalExpr neg_s = lit(Rational(-1)) * s;
    t = {(s + d1) / two, (s - d1) / two, (neg_s + d2) / two, (neg_s - d2) / two};
  }
  std::array<RadicalExpr, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = shifted(t[i], h);
  return out;
}

std::vector<RadicalExpr> solve_by_radicals(const UniPoly& p_in, int prec) {
  if (p_in.degree() < 1 || p_in.degree() > 4) fail(Errc::UnsupportedDegree, "radical solvers cover degrees 1..4");
  UniPoly p = p_in.monic();
  switch (p.degree()) {
    case 1:
      return {lit(Rational(-p[0]))};
    case 2: {
      auto s = solve_quadratic(p[1], p[0]);
      return {s.roots[0], s.roots[1]};
    }
    case 3: {
      auto r = solve_cubic(p[0], p[1], p[2], prec);
      return {r.begin(), r.end()};
    }
    default: {
      auto r = solve_quartic(p[0], p[1], p[2], p[3], prec);
      return {r.begin(), r.end()};
    }
  }
}

}  // namespace galoisrad
