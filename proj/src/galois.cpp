#include "galoisrad/galois.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "galoisrad/classical.hpp"

namespace galoisrad {

MultiPoly FundamentalFunction::phi(const Permutation& sigma, int nparams) const {
  MultiPoly out(n, nparams);
  Rational coeff = 1;
  for (int i = 1; i <= n; ++i) {
    out += coeff * MultiPoly::root(n, nparams, sigma(i));
    coeff *= alpha;
  }
  return out;
}

namespace {

BigFloat separation_threshold(int prec) { return BigFloat::pow2(-prec / 4, prec); }

bool well_separated(const std::vector<ApproxComplex>& values, int prec) {
  const BigFloat sep = separation_threshold(prec);
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (!(sep < (values[i] - values[j]).abs())) return false;
  return true;
}

void check_input(const UniPoly& p) {
  if (p.degree() < 1) fail(Errc::InvalidArgument, "polynomial must have positive degree");
  if (p.degree() > kGaloisMaxDegree) {
    fail(Errc::UnsupportedDegree, "Galois groups are computed for degree <= 4 (the resolvent of a quintic has degree 120)");
  }
  if (!is_squarefree(p)) fail(Errc::NotSquarefree, "polynomial must be squarefree");
}

std::size_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::size_t>(n) * factorial(n - 1); }

Integer ceil_rational(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

/// Least common multiple of the coefficient denominators.
Integer denominator_lcm(const UniPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

/// prod (y - r) with ascending coefficients.
std::vector<ApproxComplex> numeric_product(const std::vector<ApproxComplex>& rs, int prec) {
  std::vector<ApproxComplex> c{ApproxComplex(Rational(1), prec)};
  for (const auto& r : rs) {
    std::vector<ApproxComplex> next(c.size() + 1, ApproxComplex(prec));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] = next[k + 1] + c[k];
      next[k] = next[k] - r * c[k];
    }
    c = std::move(next);
  }
  return c;
}

enum class Rounding { Integral, NotIntegral, TooTall };

/// Rounds the candidate coefficients to integers when each is within the
/// separation threshold of one and the heights leave enough precision.
Rounding round_coefficients(const std::vector<ApproxComplex>& c, int prec, std::vector<Integer>& out) {
  const BigFloat tol = separation_threshold(prec);
  const BigFloat height_cap = BigFloat::pow2(prec / 2, prec);
  out.clear();
  for (const auto& z : c) {
    if (height_cap < abs(z.re())) return Rounding::TooTall;
  }
  for (const auto& z : c) {
    Integer v;
    mpfr_get_z(v.get_mpz_t(), z.re().get(), MPFR_RNDN);
    BigFloat diff = abs(z.re() - BigFloat(Rational(v), prec));
    if (!(diff < tol) || !(abs(z.im()) < tol)) return Rounding::NotIntegral;
    out.push_back(v);
  }
  return Rounding::Integral;
}

}  // namespace

Rational choose_alpha_for_roots(std::span<const ApproxComplex> roots, const Rational& start, int prec) {
  const int n = static_cast<int>(roots.size());
  const auto perms = all_permutations(n);
  Integer alpha = ceil_rational(start);
  for (int trial = 0; trial < kAlphaTrials; ++trial, ++alpha) {
    auto values = kernels::phi_values(roots, Rational(alpha), perms, Exec::Serial);
    if (well_separated(values, prec)) return Rational(alpha);
  }
  fail(Errc::ExhaustedCandidates, "no alpha among 100 integers separates the phi values");
}

Rational choose_alpha(const UniPoly& p, const Rational& start, int prec) {
  check_input(p);
  auto roots = numeric_roots(p, prec);
  return choose_alpha_for_roots(roots, start, prec);
}

namespace {

/// prod over S_n of (y - phi_sigma) in terms of e_1..e_n and y. It depends on
/// (n, alpha) only, so it is computed once per pair.
const MultiPoly& generic_resolvent(int n, const Rational& alpha, Exec exec) {
  static std::mutex mutex;
  static std::map<std::pair<int, Rational>, MultiPoly> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(n, alpha);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const FundamentalFunction f{n, alpha};
  const auto perms = all_permutations(n);
  const MultiPoly y = MultiPoly::param(n, 1, 0);
  std::vector<MultiPoly> factors;
  factors.reserve(perms.size());
  for (const auto& s : perms) factors.push_back(y - f.phi(s, 1));
  return cache.emplace(key, symmetric_reduce(kernels::product(factors, exec))).first->second;
}

}  // namespace

UniPoly exact_resolvent_poly(const UniPoly& p, const FundamentalFunction& f, Exec exec) {
  if (!p.is_monic()) fail(Errc::InvalidArgument, "resolvent needs a monic polynomial");
  const int n = p.degree();
  if (n < 1) fail(Errc::InvalidArgument, "polynomial must have positive degree");
  if (n > kGaloisMaxDegree) fail(Errc::UnsupportedDegree, "resolvent of degree n! is computed for n <= 4");
  if (f.n != n) fail(Errc::InvalidArgument, "fundamental function degree mismatch");
  MultiPoly specialised = substitute_coefficients(generic_resolvent(n, f.alpha, exec), p);
  std::vector<Rational> c(factorial(n) + 1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    MultiPoly coeff = specialised.coefficient_of_param(0, static_cast<int>(k));
    c[k] = coeff.constant_term();
  }
  return UniPoly(std::move(c));
}

GaloisGroupResult galois_group_for_roots(const UniPoly& p_in,
                                         const std::function<std::vector<ApproxComplex>(int)>& roots_at,
                                         const GaloisOptions& opts) {
  check_input(p_in);
  const UniPoly p = p_in.monic();
  const int n = p.degree();
  const auto perms = all_permutations(n);
  const auto subgroups = all_subgroups(named_group(GroupKind::Symmetric, n));
  // Roots are scaled by D so that the phi values are algebraic integers and
  // every rational factor of the scaled resolvent has integer coefficients.
  const Integer scale = denominator_lcm(p);
  std::map<Rational, UniPoly> resolvents;

  for (int prec = opts.precision_bits; prec <= kMaxGaloisPrecision; prec *= 2) {
    std::vector<ApproxComplex> roots = roots_at(prec);
    if (static_cast<int>(roots.size()) != n) fail(Errc::InvariantViolation, "root labeling has the wrong size");
    Rational alpha;
    if (opts.alpha) {
      alpha = *opts.alpha;
    } else {
      try {
        alpha = choose_alpha_for_roots(roots, Rational(1), prec);
      } catch (const MathError& e) {
        if (e.code() == Errc::ExhaustedCandidates) continue;
        throw;
      }
    }
    std::vector<ApproxComplex> phis = kernels::phi_values(roots, alpha, perms, opts.exec);
    if (!well_separated(phis, prec)) {
      if (opts.alpha) fail(Errc::AlphaCollision, "alpha " + to_string(alpha) + " does not separate the phi values");
      continue;
    }
    auto cached = resolvents.find(alpha);
    if (cached == resolvents.end()) {
      cached = resolvents.emplace(alpha, exact_resolvent_poly(p, FundamentalFunction{n, alpha}, opts.exec)).first;
    }
    const UniPoly& R = cached->second;
    const ApproxComplex scale_c(Rational(scale), prec);

    // The smallest subgroup whose phi values form a rational factor of R is
    // the Galois group: any such subgroup contains the orbit of phi_id.
    bool smaller_undecided = false;
    for (const auto& h : subgroups) {
      std::vector<ApproxComplex> values;
      for (const auto& s : h.elements()) {
        auto it = std::lower_bound(perms.begin(), perms.end(), s);
        values.push_back(scale_c * phis[static_cast<std::size_t>(it - perms.begin())]);
      }
      std::vector<Integer> ints;
      Rounding verdict = round_coefficients(numeric_product(values, prec), prec, ints);
      if (verdict == Rounding::TooTall) {
        smaller_undecided = true;
        continue;
      }
      if (verdict == Rounding::NotIntegral) continue;
      // F(y) = D^(-|H|) F_s(D y).
      const int deg = static_cast<int>(ints.size()) - 1;
      std::vector<Rational> fc(ints.size());
      for (int k = 0; k <= deg; ++k) {
        Rational s = pow(Rational(scale), k - deg);
        fc[static_cast<std::size_t>(k)] = Rational(ints[static_cast<std::size_t>(k)]) * s;
      }
      UniPoly factor(std::move(fc));
      if (!divides(factor, R)) continue;
      if (smaller_undecided) break;
      if (!h.contains(Permutation::identity(n))) fail(Errc::InvariantViolation, "group lacks the identity");
      GaloisGroupResult out;
      out.group = h;
      out.alpha = alpha;
      out.roots = std::move(roots);
      out.precision_used = prec;
      out.resolvent.R = R;
      out.resolvent.factor_of_phi1 = std::move(factor);
      out.resolvent.phi_values = std::move(phis);
      return out;
    }
  }
  fail(Errc::ClusterAmbiguity, "phi values could not be matched to a rational factor up to 4096 bits");
}

GaloisGroupResult galois_group(const UniPoly& p, const GaloisOptions& opts) {
  check_input(p);
  const UniPoly monic = p.monic();
  return galois_group_for_roots(monic, [&](int prec) { return numeric_roots(monic, prec); }, opts);
}

GaloisResolvent exact_resolvent(const UniPoly& p, const FundamentalFunction& f, int prec) {
  GaloisOptions opts;
  opts.alpha = f.alpha;
  opts.precision_bits = prec;
  return galois_group(p, opts).resolvent;
}

namespace {

RadicalExpr lit(const Rational& r) { return RadicalExpr::rational(r); }

/// sqrt of a value that may be known to be rational; perfect squares stay rational.
RadicalExpr sqrt_of(const RadicalExpr& inner, const std::optional<Rational>& known) {
  if (known) {
    if (auto r = is_perfect_square(*known)) return lit(*r);
    return RadicalExpr::sqrt(lit(*known));
  }
  return RadicalExpr::sqrt(inner);
}

std::string signed_term(const Rational& c) {
  if (c == 0) return "";
  return c > 0 ? " + " + to_string(c) : " - " + to_string(Rational(-c));
}

CompositionSeries series_from_chain(const std::vector<PermGroup>& descending) {
  CompositionSeries s;
  s.chain.assign(descending.rbegin(), descending.rend());
  for (std::size_t i = 0; i + 1 < descending.size(); ++i) s.indexes.push_back(index(descending[i + 1], descending[i]));
  return s;
}

bool all_prime(const std::vector<std::size_t>& xs) {
  return std::all_of(xs.begin(), xs.end(), [](std::size_t k) { return is_prime_small(k); });
}

}  // namespace

SolvabilityReport biquadratic_chain(const Rational& a, const Rational& b, const GaloisOptions& opts) {
  const UniPoly p({b, Rational(0), a, Rational(0), Rational(1)});
  if (b == 0 || a * a == 4 * b) fail(Errc::NotSquarefree, "x^4 + a x^2 + b needs b != 0 and a^2 != 4b");
  const Rational disc = a * a - 4 * b;

  std::optional<Rational> xi1_rational = is_perfect_square(disc);
  RadicalExpr xi1 = xi1_rational ? lit(*xi1_rational) : RadicalExpr::sqrt(lit(disc));
  std::optional<Rational> u2, u3;
  if (xi1_rational) {
    u2 = (*xi1_rational - a) / 2;
    u3 = (-*xi1_rational - a) / 2;
  }
  const RadicalExpr minus = lit(Rational(-1));
  RadicalExpr up = a == 0 ? xi1 : xi1 - lit(a);
  RadicalExpr down = a == 0 ? minus * xi1 : minus * xi1 - lit(a);
  RadicalExpr xi2 = sqrt_of(up / lit(Rational(2)), u2);
  RadicalExpr xi3 = sqrt_of(down / lit(Rational(2)), u3);
  std::vector<RadicalExpr> labeled = {xi2, minus * xi2, xi3, minus * xi3};

  GaloisGroupResult g = galois_group_for_roots(
      p,
      [&](int prec) {
        std::vector<ApproxComplex> rs;
        for (const auto& e : labeled) rs.push_back(e.eval(prec));
        return rs;
      },
      opts);
  const int prec = g.precision_used;
  const std::vector<ApproxComplex>& x = g.roots;
  const ApproxComplex half(Rational(1, 2), prec);

  struct Step {
    std::string name;
    std::string relation;
    RadicalExpr value;
    std::function<ApproxComplex(const Permutation&)> f;
  };
  auto at = [&](const Permutation& s, int i) -> const ApproxComplex& { return x[static_cast<std::size_t>(s.image0(i))]; };
  std::vector<Step> steps = {
      {"xi1", "xi1^2 = " + to_string(disc), xi1,
       [&](const Permutation& s) { return at(s, 0) * at(s, 0) - at(s, 2) * at(s, 2); }},
      {"xi2", "2*xi2^2 = xi1" + signed_term(Rational(-a)), xi2,
       [&](const Permutation& s) { return half * (at(s, 0) - at(s, 1)); }},
      {"xi3", "2*xi3^2 = -xi1" + signed_term(Rational(-a)), xi3,
       [&](const Permutation& s) { return half * (at(s, 2) - at(s, 3)); }},
  };

  SolvabilityReport rep;
  rep.polynomial = p;
  rep.group = g.group;
  rep.method = "biquadratic";
  rep.alpha = g.alpha;
  rep.roots = g.roots;
  std::vector<PermGroup> chain{g.group};
  const BigFloat tol = separation_threshold(prec);
  const Permutation id = Permutation::identity(4);
  for (const auto& step : steps) {
    const PermGroup& current = chain.back();
    const ApproxComplex base = step.f(id);
    std::vector<Permutation> fixing;
    for (const auto& s : current.elements())
      if ((step.f(s) - base).abs() < tol) fixing.push_back(s);
    PermGroup stab = PermGroup::closure(4, fixing);
    if (stab.order() != fixing.size()) fail(Errc::InvariantViolation, "stabilizer is not a subgroup");
    if (stab.order() == current.order()) continue;
    rep.tower.push_back(Adjunction{step.name, step.relation, step.value, current.order(), stab.order()});
    chain.push_back(std::move(stab));
  }
  if (!chain.back().is_trivial()) fail(Errc::InvariantViolation, "the tower does not reach the trivial group");
  rep.series = series_from_chain(chain);
  rep.solvable = all_prime(rep.series.indexes);
  rep.radical_roots = labeled;
  return rep;
}

SolvabilityReport solvability_report(const UniPoly& p_in, const GaloisOptions& opts) {
  check_input(p_in);
  const UniPoly p = p_in.monic();
  if (p.degree() == 4 && p[3] == 0 && p[1] == 0) return biquadratic_chain(p[2], p[0], opts);
  GaloisGroupResult g = galois_group(p, opts);
  SolvabilityReport rep;
  rep.polynomial = p;
  rep.group = g.group;
  rep.series = composition_series(g.group);
  rep.solvable = all_prime(rep.series.indexes);
  rep.method = "resolvent";
  rep.alpha = g.alpha;
  rep.roots = g.roots;
  rep.radical_roots = solve_by_radicals(p, opts.precision_bits);
  return rep;
}

SolvabilityReport solvability_report_for_group(const PermGroup& g) {
  SolvabilityReport rep;
  rep.group = g;
  rep.series = composition_series(g);
  rep.solvable = all_prime(rep.series.indexes);
  rep.method = "supplied";
  return rep;
}

}  // namespace galoisrad
