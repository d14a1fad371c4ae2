#include "galoisrad/upoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace galoisrad {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : UniPoly(std::vector<Rational>(coeffs)) {}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& r) { return UniPoly({Rational(-r), Rational(1)}); }

UniPoly UniPoly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return UniPoly(std::move(v));
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::operator[](int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational UniPoly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return inv * *this;
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c = -c;
  return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& c, const UniPoly& a) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result = constant(1);
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly result;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) result = result * inner + constant(*it);
  return result;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ApproxComplex UniPoly::eval(const ApproxComplex& x) const {
  int prec = x.precision_bits();
  ApproxComplex acc(prec);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x;
    acc = acc + ApproxComplex(*it, prec);
  }
  return acc;
}

UniPoly UniPoly::reversed() const {
  std::vector<Rational> v(coeffs_.rbegin(), coeffs_.rend());
  return UniPoly(std::move(v));
}

std::string UniPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (!unit || i == 0) out << mag.get_str();
    if (i >= 1) out << var;
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

std::pair<UniPoly, UniPoly> div_rem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {UniPoly{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db) + 1);
  Rational inv_lead = 1 / b.leading();
  for (int i = da; i >= db; --i) {
    Rational q = rem[static_cast<std::size_t>(i)] * inv_lead;
    if (q == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly div_exact(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = div_rem(a, b);
  if (!r.is_zero()) fail(Errc::InvariantViolation, "inexact polynomial division");
  return q;
}

bool divides(const UniPoly& divisor, const UniPoly& a) { return div_rem(a, divisor).second.is_zero(); }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = div_rem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return div_exact(p, gcd(p, p.derivative())).monic();
}

bool is_squarefree(const UniPoly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

Rational resultant(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) return Rational(0);
  const int m = p.degree();
  const int n = q.degree();
  const int size = m + n;
  if (size == 0) return Rational(1);
  std::vector<std::vector<Rational>> s(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
  // Highest-degree coefficient first within each row.
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = p[m - j];
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] = q[n - j];
  return bareiss_determinant(
      std::move(s), Rational(1), [](const Rational& x) { return x == 0; },
      [](const Rational& a, const Rational& b) { return Rational(a / b); });
}

Rational discriminant(const UniPoly& p) {
  const int n = p.degree();
  if (n < 1) fail(Errc::InvalidArgument, "discriminant needs degree at least 1");
  Rational res = resultant(p, p.derivative());
  Rational d = res / p.leading();
  if (((n * (n - 1)) / 2) % 2 == 1) d = -d;
  return d;
}

// ---------------------------------------------------------------------------
// Factorization

namespace {

/// Scale to a primitive integer polynomial with positive leading coefficient.
std::vector<Integer> primitive_integer(const UniPoly& p) {
  Integer den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> v;
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Rational scaled = c * Rational(den);
    v.push_back(scaled.get_num());
    content = gcd(content, scaled.get_num());
  }
  if (content != 0) {
    for (auto& c : v) c /= content;
  }
  if (!v.empty() && v.back() < 0)
    for (auto& c : v) c = -c;
  return v;
}

Integer eval_int(const std::vector<Integer>& f, const Integer& x) {
  Integer acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> primes;
  std::vector<int> exps;
  for (Integer d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      primes.push_back(d);
      exps.push_back(e);
    }
  }
  if (n > 1) {
    primes.push_back(n);
    exps.push_back(1);
  }
  std::vector<Integer> divs{1};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    std::size_t count = divs.size();
    Integer pw = 1;
    for (int e = 1; e <= exps[i]; ++e) {
      pw *= primes[i];
      for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pw);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

/// Lagrange interpolation through (xs[i], ys[i]).
UniPoly interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  UniPoly result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UniPoly term = UniPoly::constant(Rational(ys[i]));
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      Rational scale = Rational(1) / Rational(xs[i] - xs[j]);
      term = term * UniPoly({Rational(-xs[j]) * scale, scale});
    }
    result += term;
  }
  return result;
}

/// Kronecker search for a factor of degree k of a squarefree primitive integer
/// polynomial with no rational roots.
std::optional<UniPoly> kronecker_factor(const UniPoly& h, int k) {
  std::vector<Integer> f = primitive_integer(h);
  // Choose k+1 evaluation points whose values have the fewest divisors.
  std::vector<std::pair<std::size_t, Integer>> pool;
  const int span_limit = 4 * static_cast<int>(f.size()) + 8;
  for (int x = -span_limit; x <= span_limit; ++x) {
    Integer v = eval_int(f, Integer(x));
    if (v == 0) continue;
    pool.emplace_back(positive_divisors(v).size(), Integer(x));
  }
  std::stable_sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (pool.size() < static_cast<std::size_t>(k + 1)) return std::nullopt;
  std::vector<Integer> xs;
  std::vector<std::vector<Integer>> choices;
  for (int i = 0; i <= k; ++i) {
    const Integer& x = pool[static_cast<std::size_t>(i)].second;
    xs.push_back(x);
    std::vector<Integer> divs = positive_divisors(eval_int(f, x));
    std::vector<Integer> signed_divs;
    for (const auto& d : divs) {
      signed_divs.push_back(d);
      // Fix the sign at the first point: g and -g are the same factor.
      if (i > 0) signed_divs.push_back(-d);
    }
    choices.push_back(std::move(signed_divs));
  }
  std::vector<std::size_t> idx(choices.size(), 0);
  std::vector<Integer> ys(choices.size());
  while (true) {
    for (std::size_t i = 0; i < choices.size(); ++i) ys[i] = choices[i][idx[i]];
    UniPoly g = interpolate(xs, ys);
    if (g.degree() == k) {
      bool integral = std::all_of(g.coeffs().begin(), g.coeffs().end(), [](const Rational& c) { return is_integer(c); });
      if (integral && f.back() % g.leading().get_num() == 0 && divides(g, h)) return g.monic();
    }
    std::size_t pos = 0;
    while (pos < idx.size()) {
      if (++idx[pos] < choices[pos].size()) break;
      idx[pos] = 0;
      ++pos;
    }
    if (pos == idx.size()) break;
  }
  return std::nullopt;
}

/// Squarefree decomposition (Yun): pairs (part, multiplicity), monic parts.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly f = p.monic();
  if (f.degree() <= 0) return out;
  UniPoly fp = f.derivative();
  UniPoly b = gcd(f, fp);
  UniPoly c = div_exact(f, b);
  UniPoly d = div_exact(fp, b) - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    UniPoly a = gcd(c, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    c = div_exact(c, a);
    d = div_exact(d, a) - c.derivative();
    ++i;
  }
  return out;
}

bool factor_less(const Factor& a, const Factor& b) {
  if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
  for (int i = a.poly.degree(); i >= 0; --i) {
    if (a.poly[i] != b.poly[i]) return a.poly[i] < b.poly[i];
  }
  return a.multiplicity < b.multiplicity;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  std::vector<Integer> f = primitive_integer(p);
  std::size_t shift = 0;
  while (shift < f.size() && f[shift] == 0) ++shift;
  if (shift > 0) {
    roots.emplace_back(0);
    f.erase(f.begin(), f.begin() + static_cast<long>(shift));
  }
  if (f.size() <= 1) return roots;
  std::vector<Integer> nums = positive_divisors(f.front());
  std::vector<Integer> dens = positive_divisors(f.back());
  std::vector<Rational> found;
  for (const auto& q : dens) {
    for (const auto& n : nums) {
      for (int s : {1, -1}) {
        Rational cand = make_rational(Integer(n * s), q);
        if (p.eval(cand) == 0) found.push_back(cand);
      }
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

UniPoly FactorList::product() const {
  UniPoly out = UniPoly::constant(unit);
  for (const auto& f : factors) out *= f.poly.pow(static_cast<unsigned>(f.multiplicity));
  return out;
}

FactorList factor_over_Q(const UniPoly& p) {
  if (p.is_zero()) fail(Errc::InvalidArgument, "cannot factor the zero polynomial");
  if (p.degree() > kFactorDegreeGuard) {
    fail(Errc::DegreeTooLarge, "factorization guard is degree " + std::to_string(kFactorDegreeGuard));
  }
  FactorList out;
  out.unit = p.leading();
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    UniPoly rest = part;
    for (const auto& r : rational_roots(rest)) {
      out.factors.push_back({UniPoly::linear_root(r), mult});
      rest = div_exact(rest, UniPoly::linear_root(r));
    }
    for (int k = 2; 2 * k <= rest.degree(); ++k) {
      while (2 * k <= rest.degree()) {
        auto g = kronecker_factor(rest, k);
        if (!g) break;
        out.factors.push_back({*g, mult});
        rest = div_exact(rest, *g).monic();
      }
    }
    if (rest.degree() > 0) out.factors.push_back({rest.monic(), mult});
  }
  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  return out;
}

bool is_irreducible(const UniPoly& p) {
  if (p.degree() < 1) return false;
  FactorList f = factor_over_Q(p);
  return f.factors.size() == 1 && f.factors.front().multiplicity == 1;
}

UniPoly elementary_symmetric_from_roots(std::span<const Rational> roots) {
  UniPoly out = UniPoly::constant(1);
  for (const auto& r : roots) out *= UniPoly::linear_root(r);
  return out;
}

std::vector<Rational> coefficients_to_power_sums(const UniPoly& p, int k) {
  // With p monic of degree n, write p = x^n + c_1 x^(n-1) + ... + c_n.
  // Newton: s_m + c_1 s_(m-1) + ... + c_(m-1) s_1 + m c_m = 0 (c_j = 0 for j > n).
  UniPoly q = p.monic();
  const int n = q.degree();
  auto c = [&](int j) { return j > n ? Rational(0) : q[n - j]; };
  std::vector<Rational> s(static_cast<std::size_t>(k) + 1);
  for (int m = 1; m <= k; ++m) {
    Rational acc = c(m) * m;
    for (int j = 1; j < m; ++j) acc += c(j) * s[static_cast<std::size_t>(m - j)];
    s[static_cast<std::size_t>(m)] = -acc;
  }
  s.erase(s.begin());
  return s;
}

// ---------------------------------------------------------------------------
// Numeric roots

namespace {

Integer rounded_scaled(const BigFloat& x, int half_bits) {
  BigFloat t = x;
  mpfr_mul_2si(t.get(), t.get(), half_bits, MPFR_RNDN);
  Integer z;
  mpfr_get_z(z.get_mpz_t(), t.get(), MPFR_RNDN);
  return z;
}

}  // namespace

bool root_order_less(const ApproxComplex& a, const ApproxComplex& b) {
  int half = std::min(a.precision_bits(), b.precision_bits()) / 2;
  Integer ar = rounded_scaled(a.re(), half);
  Integer br = rounded_scaled(b.re(), half);
  if (ar != br) return ar < br;
  return rounded_scaled(a.im(), half) < rounded_scaled(b.im(), half);
}

std::vector<ApproxComplex> numeric_roots(const UniPoly& p, int precision_bits) {
  const int n = p.degree();
  if (n < 1) fail(Errc::InvalidArgument, "numeric_roots needs degree at least 1");
  const int wp = precision_bits + 64;
  UniPoly q = p.monic();
  std::vector<ApproxComplex> roots;
  if (n == 1) {
    roots.emplace_back(Rational(-q[0]), wp);
  } else {
    // Cauchy bound for the start radius.
    Rational bound = 0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, Rational(abs(q[i])));
    BigFloat radius = BigFloat(Rational(bound + 1), wp) * BigFloat(Rational(1, 2), wp);
    BigFloat offset(Rational(2, 5), wp);
    BigFloat two_pi = BigFloat::pi(wp) * BigFloat(2L, wp);
    for (int k = 0; k < n; ++k) {
      BigFloat angle = two_pi * BigFloat(k, wp) / BigFloat(n, wp) + offset;
      roots.push_back(ApproxComplex::polar(radius, angle));
    }
    BigFloat stop = BigFloat::pow2(-(wp - 24), wp);
    bool converged = false;
    const int max_iter = 200 + 4 * wp;
    for (int iter = 0; iter < max_iter && !converged; ++iter) {
      BigFloat max_step(wp);
      for (int k = 0; k < n; ++k) {
        ApproxComplex den(Rational(1), wp);
        for (int j = 0; j < n; ++j) {
          if (j != k) den = den * (roots[static_cast<std::size_t>(k)] - roots[static_cast<std::size_t>(j)]);
        }
        if (den.is_zero()) fail(Errc::ConvergenceFailure, "colliding Durand-Kerner iterates");
        ApproxComplex step = q.eval(roots[static_cast<std::size_t>(k)]) / den;
        roots[static_cast<std::size_t>(k)] = roots[static_cast<std::size_t>(k)] - step;
        BigFloat mag = step.abs();
        BigFloat scale = roots[static_cast<std::size_t>(k)].abs();
        if (scale < BigFloat(1L, wp)) scale = BigFloat(1L, wp);
        BigFloat rel = mag / scale;
        if (max_step < rel) max_step = rel;
      }
      converged = max_step < stop;
    }
    if (!converged) fail(Errc::ConvergenceFailure, "Durand-Kerner did not converge");
  }
  UniPoly dq = q.derivative();
  for (auto& r : roots) {
    for (int i = 0; i < 3; ++i) {
      ApproxComplex d = dq.eval(r);
      if (d.is_zero()) break;
      r = r - q.eval(r) / d;
    }
  }
  std::vector<ApproxComplex> out;
  BigFloat tol = residual_tolerance(precision_bits);
  for (auto& r : roots) {
    BigFloat re(precision_bits);
    BigFloat im(precision_bits);
    mpfr_set(re.get(), r.re().get(), MPFR_RNDN);
    mpfr_set(im.get(), r.im().get(), MPFR_RNDN);
    ApproxComplex z(re, im);
    if (tol < q.eval(r).abs()) fail(Errc::ConvergenceFailure, "root residual above tolerance");
    out.push_back(std::move(z));
  }
  std::sort(out.begin(), out.end(), root_order_less);
  return out;
}

}  // namespace galoisrad
