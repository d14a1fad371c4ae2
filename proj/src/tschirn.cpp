#include "galoisrad/tschirn.hpp"

#include <algorithm>

namespace galoisrad {

void TschirnhausMap::validate() const {
  if (source_degree < 2) fail(Errc::InvalidArgument, "source degree must be at least 2");
  if (static_cast<int>(aux_coeffs.size()) != source_degree - 1) {
    fail(Errc::InvalidArgument, "a Tschirnhaus map for degree n needs n - 1 coefficients");
  }
}

UniPoly TschirnhausMap::aux_poly() const {
  validate();
  const int m = source_degree - 1;
  std::vector<Rational> c(static_cast<std::size_t>(m + 1));
  c[static_cast<std::size_t>(m)] = 1;
  for (int k = 1; k <= m; ++k) c[static_cast<std::size_t>(m - k)] = aux_coeffs[static_cast<std::size_t>(k - 1)];
  return UniPoly(std::move(c));
}

UniPoly eliminate(const UniPoly& p, const TschirnhausMap& t) {
  if (!p.is_monic() || p.degree() < 2) fail(Errc::InvalidArgument, "eliminate needs a monic polynomial of degree >= 2");
  if (t.source_degree != p.degree()) fail(Errc::InvalidArgument, "map degree does not match the polynomial");
  const int n = p.degree();
  const UniPoly g = t.aux_poly();
  const UniPoly y = UniPoly::monomial(Rational(1), 1);

  // q(x) = y - g(x), with coefficients in Q[y]; degree n - 1 in x.
  const int m = n - 1;
  std::vector<UniPoly> q(static_cast<std::size_t>(m + 1));
  for (int i = 0; i <= m; ++i) q[static_cast<std::size_t>(i)] = UniPoly::constant(Rational(-g[i]));
  q[0] += y;

  // Sylvester matrix: m rows of p above n rows of q, highest powers first.
  const int size = n + m;
  std::vector<std::vector<UniPoly>> rows(static_cast<std::size_t>(size), std::vector<UniPoly>(static_cast<std::size_t>(size)));
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + n - i)] = UniPoly::constant(p[i]);
  }
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) rows[static_cast<std::size_t>(m + r)][static_cast<std::size_t>(r + m - i)] = q[static_cast<std::size_t>(i)];
  }
  return bareiss_determinant(
      std::move(rows), UniPoly::constant(Rational(1)), [](const UniPoly& e) { return e.is_zero(); },
      [](const UniPoly& a, const UniPoly& b) { return div_exact(a, b); });
}

QuadraticSurd::QuadraticSurd(Rational p, Rational q, Rational d) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
  if (q_ == 0) {
    d_ = 0;
    return;
  }
  if (auto root = is_perfect_square(d_)) {
    p_ += q_ * *root;
    q_ = 0;
    d_ = 0;
  }
}

namespace {

Rational common_radicand(const QuadraticSurd& a, const QuadraticSurd& b) {
  if (a.is_rational()) return b.d();
  if (b.is_rational() || a.d() == b.d()) return a.d();
  fail(Errc::InvalidArgument, "surds with different radicands");
}

}  // namespace

QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) {
  return QuadraticSurd(a.p_ + b.p_, a.q_ + b.q_, common_radicand(a, b));
}

QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) {
  return QuadraticSurd(a.p_ - b.p_, a.q_ - b.q_, common_radicand(a, b));
}

QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
  Rational d = common_radicand(a, b);
  return QuadraticSurd(a.p_ * b.p_ + a.q_ * b.q_ * d, a.p_ * b.q_ + a.q_ * b.p_, d);
}

QuadraticSurd operator*(const Rational& c, const QuadraticSurd& a) { return QuadraticSurd(c * a.p_, c * a.q_, a.d_); }

RadicalExpr QuadraticSurd::to_expr() const {
  RadicalExpr rational_part = RadicalExpr::rational(p_);
  if (q_ == 0) return rational_part;
  RadicalExpr surd = RadicalExpr::sqrt(RadicalExpr::rational(d_));
  if (q_ != 1) surd = RadicalExpr::rational(q_) * surd;
  return p_ == 0 ? surd : rational_part + surd;
}

ApproxComplex QuadraticSurd::eval(int prec) const { return to_expr().eval(prec); }

UniPoly CubicReduction::binomial_if_rational() const {
  if (!c.is_rational()) fail(Errc::InvalidArgument, "c is irrational");
  return UniPoly({Rational(-c.p()), Rational(0), Rational(0), Rational(1)});
}

TschirnhausMap CubicReduction::rational_map() const {
  if (!b1.is_rational()) fail(Errc::InvalidArgument, "b1 is irrational");
  return TschirnhausMap{{b1.p(), b2}, 3};
}

CubicReduction reduce_cubic_to_binomial(const UniPoly& p) {
  if (p.degree() != 3) {
    fail(Errc::UnsupportedDegree, "binomial reduction is implemented for cubics only; for n = 5 the constraint system "
                                  "has degree 24 in the auxiliary coefficients");
  }
  if (!p.is_monic() || p[2] != 0) fail(Errc::InvalidArgument, "expected a depressed monic cubic x^3 + a x + b");
  CubicReduction r;
  r.a = p[1];
  r.b = p[0];
  const Rational& a = r.a;
  const Rational& b = r.b;
  if (a == 0) fail(Errc::AlreadyBinomial, "x^3 + b is already binomial");

  // With y = x^2 + b1 x + b2 the elimination gives
  //   Q(y) = y^3 + (2a - 3 b2) y^2 + (a^2 + a b1^2 - 4 a b2 + 3 b b1 + 3 b2^2) y - c.
  r.b2 = 2 * a / 3;
  // The y coefficient becomes a b1^2 + 3 b b1 - a^2/3.
  const Rational qa = a, qb = 3 * b, qc = -a * a / 3;
  if (qa == 0) fail(Errc::DegenerateConstraint, "quadratic constraint for b1 has a vanishing leading coefficient");
  const Rational disc = qb * qb - 4 * qa * qc;
  r.b1 = QuadraticSurd(Rational(-qb / (2 * qa)), Rational(1 / (2 * qa)), disc);

  const QuadraticSurd b1 = r.b1;
  const QuadraticSurd b2 = QuadraticSurd::rational(r.b2);
  const QuadraticSurd A = QuadraticSurd::rational(a);
  const QuadraticSurd B = QuadraticSurd::rational(b);
  const QuadraticSurd b1sq = b1 * b1;
  r.a1_residual = QuadraticSurd::rational(Rational(2 * a - 3 * r.b2));
  r.a2_residual = A * A + A * b1sq - Rational(4) * (A * b2) + Rational(3) * (B * b1) + Rational(3) * (b2 * b2);
  if (!r.a1_residual.is_zero() || !r.a2_residual.is_zero()) {
    fail(Errc::InvariantViolation, "constraint residuals did not vanish");
  }
  r.c = A * A * b2 - A * B * b1 + A * b1sq * b2 - Rational(2) * (A * b2 * b2) + B * B - B * b1sq * b1 +
        Rational(3) * (B * b1 * b2) + b2 * b2 * b2;
  return r;
}

CandidateSplit split_candidates(const UniPoly& p, const RadicalExpr& b1, const RadicalExpr& b2,
                                const RadicalExpr& y_value, int prec) {
  // x^2 + b1 x + (b2 - y) = 0
  const RadicalExpr two = RadicalExpr::integer(2);
  RadicalExpr disc = b1 * b1 - RadicalExpr::integer(4) * (b2 - y_value);
  RadicalExpr minus_b1 = RadicalExpr::integer(-1) * b1;
  std::array<RadicalExpr, 2> candidates = {(minus_b1 + RadicalExpr::sqrt(disc, 0)) / two,
                                           (minus_b1 + RadicalExpr::sqrt(disc, 1)) / two};
  const BigFloat tol = residual_tolerance(prec);
  std::vector<std::pair<BigFloat, RadicalExpr>> kept;
  CandidateSplit out;
  for (const auto& x : candidates) {
    BigFloat residual = p.eval(x.eval(prec)).abs();
    if (residual < tol) {
      kept.emplace_back(residual, x);
    } else {
      out.rejected.push_back(x);
    }
  }
  std::stable_sort(kept.begin(), kept.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  for (auto& k : kept) out.kept.push_back(std::move(k.second));
  return out;
}

std::vector<RadicalExpr> back_substitute(const UniPoly& p, const RadicalExpr& b1, const RadicalExpr& b2,
                                         const RadicalExpr& y_value, int prec) {
  CandidateSplit split = split_candidates(p, b1, b2, y_value, prec);
  if (split.kept.empty()) fail(Errc::NoCandidateSurvives, "no back-substituted candidate satisfies the polynomial");
  return std::move(split.kept);
}

std::vector<RadicalExpr> back_substitute(const UniPoly& p, const TschirnhausMap& t, const RadicalExpr& y_value,
                                         int prec) {
  t.validate();
  if (t.source_degree != 3) fail(Errc::UnsupportedDegree, "back substitution is implemented for cubics only");
  return back_substitute(p, RadicalExpr::rational(t.aux_coeffs[0]), RadicalExpr::rational(t.aux_coeffs[1]), y_value,
                         prec);
}

TschirnhausSolution tschirnhaus_solve(const UniPoly& p_in, int prec) {
  if (p_in.degree() != 3) fail(Errc::UnsupportedDegree, "the Tschirnhaus pipeline is implemented for cubics only");
  const UniPoly p = p_in.monic();
  TschirnhausSolution sol;
  // u = x + shift removes the quadratic term; x = u - shift.
  sol.shift = p[2] / 3;
  const UniPoly depressed = p.compose(UniPoly({Rational(-sol.shift), Rational(1)}));
  const RadicalExpr shift_back = RadicalExpr::rational(Rational(-sol.shift));
  auto unshift = [&](const RadicalExpr& e) { return sol.shift == 0 ? e : e + shift_back; };

  const Rational a = depressed[1];
  const Rational b = depressed[0];
  if (a == 0) {
    RadicalExpr cube = RadicalExpr::kth_root(3, RadicalExpr::rational(Rational(-b)));
    for (long k = 0; k < 3; ++k) {
      RadicalExpr y = k == 0 ? cube : RadicalExpr::root_of_unity(3, k) * cube;
      sol.y_values.push_back(y);
      sol.roots.push_back(unshift(y));
    }
    return sol;
  }

  sol.reduced = true;
  sol.reduction = reduce_cubic_to_binomial(depressed);
  const CubicReduction& r = sol.reduction;
  if (r.c.is_zero()) {
    // Q(y) = y^3 forces g to vanish on every root, which for squarefree input
    // is impossible: the cubic has the double root -3b/(2a).
    Rational dbl = -3 * b / (2 * a);
    for (const Rational& x : {dbl, dbl, Rational(-2 * dbl)}) sol.roots.push_back(unshift(RadicalExpr::rational(x)));
    sol.y_values.push_back(RadicalExpr::integer(0));
    return sol;
  }

  const RadicalExpr b1 = r.b1.to_expr();
  const RadicalExpr b2 = RadicalExpr::rational(r.b2);
  const RadicalExpr cube = RadicalExpr::kth_root(3, r.c.to_expr());
  for (long k = 0; k < 3; ++k) {
    RadicalExpr y = k == 0 ? cube : RadicalExpr::root_of_unity(3, k) * cube;
    sol.y_values.push_back(y);
    CandidateSplit split = split_candidates(depressed, b1, b2, y, prec);
    if (split.kept.empty()) fail(Errc::NoCandidateSurvives, "no back-substituted candidate satisfies the polynomial");
    sol.roots.push_back(unshift(split.kept.front()));
    for (const auto& f : split.rejected) sol.false_roots.push_back(unshift(f));
  }
  return sol;
}

}  // namespace galoisrad
