#include "galoisrad/cyclo.hpp"

#include <array>

namespace galoisrad {

std::vector<std::pair<Integer, int>> factor_integer(const Integer& n_in) {
  if (n_in < 1) fail(Errc::InvalidArgument, "factor_integer needs n >= 1");
  std::vector<std::pair<Integer, int>> out;
  Integer n = n_in;
  auto take = [&](const Integer& d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  };
  take(Integer(2));
  for (Integer d = 3; d * d <= n; d += 2) take(d);
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

namespace {

bool miller_rabin_round(const Integer& n, const Integer& d, unsigned long s, unsigned long base) {
  Integer a = base;
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  const unsigned long kTrialLimit = 1000000;
  for (unsigned long d = 2; d <= kTrialLimit; d += (d == 2 ? 1 : 2)) {
    Integer dd = d;
    if (dd * dd > n) return true;
    if (n % dd == 0) return n == dd;
  }
  Integer d = n - 1;
  unsigned long s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  static constexpr std::array<unsigned long, 13> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned long b : kBases)
    if (!miller_rabin_round(n, d, s, b)) return false;
  static const Integer kDeterministicBound("3317044064679887385961981");
  if (n < kDeterministicBound) return true;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Integer euler_phi(const Integer& m) {
  if (m < 1) fail(Errc::InvalidArgument, "euler_phi needs m >= 1");
  Integer phi = m;
  for (const auto& [p, e] : factor_integer(m)) phi = phi / p * (p - 1);
  return phi;
}

int moebius(const Integer& k) {
  if (k < 1) fail(Errc::InvalidArgument, "moebius needs k >= 1");
  int mu = 1;
  for (const auto& [p, e] : factor_integer(k)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::vector<long> divisors(long n) {
  if (n < 1) fail(Errc::InvalidArgument, "divisors needs n >= 1");
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

UniPoly cyclotomic_poly(long m) {
  if (m < 1 || m > kCyclotomicMaxOrder) fail(Errc::UnsupportedSize, "cyclotomic order must be in 1..10000");
  UniPoly num = UniPoly::constant(Rational(1));
  UniPoly den = UniPoly::constant(Rational(1));
  for (long k : divisors(m)) {
    int mu = moebius(Integer(k));
    if (mu == 0) continue;
    // 1 - x^(m/k)
    UniPoly f = UniPoly::constant(Rational(1)) - UniPoly::monomial(Rational(1), static_cast<int>(m / k));
    (mu > 0 ? num : den) *= f;
  }
  // The printed product equals the cyclotomic polynomial up to sign (only
  // m = 1 gives 1 - x), so normalize to monic.
  return div_exact(num, den).monic();
}

bool verify_product_identity(long n) {
  if (n < 1) fail(Errc::InvalidArgument, "n must be positive");
  UniPoly prod = UniPoly::constant(Rational(1));
  for (long m : divisors(n)) prod *= cyclotomic_poly(m);
  UniPoly target = UniPoly::monomial(Rational(1), static_cast<int>(n)) - UniPoly::constant(Rational(1));
  return prod == target;
}

Integer fermat_number(int k) {
  if (k < 0 || k > 6) fail(Errc::UnsupportedSize, "fermat_number supports k <= 6");
  Integer f;
  mpz_ui_pow_ui(f.get_mpz_t(), 2, 1UL << k);
  return f + 1;
}

bool is_power_of_two(const Integer& n) { return n > 0 && mpz_popcount(n.get_mpz_t()) == 1; }

std::string_view reason_name(ConstructReason r) {
  switch (r) {
    case ConstructReason::PowerOfTwoTotient:
      return "power-of-two-totient";
    case ConstructReason::CompositeFermat:
      return "composite-fermat";
    case ConstructReason::OddFactor:
      return "odd-factor";
  }
  return "odd-factor";
}

ConstructibilityVerdict is_constructible_polygon(const Integer& p, bool extended) {
  ConstructibilityVerdict v;
  v.p = p;
  if (p < 3) fail(Errc::InvalidArgument, "a polygon needs at least 3 sides");
  const bool fermat_form = is_power_of_two(Integer(p - 1));
  if (!extended) {
    if (!is_prime(p)) {
      if (!fermat_form) fail(Errc::NotPrime, to_string(Rational(p)) + " is not prime");
      v.constructible = false;
      v.reason = ConstructReason::CompositeFermat;
      return v;
    }
    v.constructible = fermat_form;
    v.reason = fermat_form ? ConstructReason::PowerOfTwoTotient : ConstructReason::OddFactor;
    return v;
  }
  static const Integer kExtendedLimit("1000000000000000");
  if (p > kExtendedLimit) fail(Errc::UnsupportedSize, "extended mode factors by trial division up to 1e15");
  v.constructible = is_power_of_two(euler_phi(p));
  if (v.constructible) {
    v.reason = ConstructReason::PowerOfTwoTotient;
  } else {
    v.reason = (fermat_form && !is_prime(p)) ? ConstructReason::CompositeFermat : ConstructReason::OddFactor;
  }
  return v;
}

UniPoly vandermonde_reduce(long p) {
  if (p < 3 || p % 2 == 0) fail(Errc::InvalidArgument, "vandermonde_reduce needs an odd p >= 3");
  const long q = (p - 1) / 2;
  const UniPoly y = UniPoly::monomial(Rational(1), 1);
  UniPoly prev = UniPoly::constant(Rational(2));  // T0
  UniPoly cur = y;                                // T1
  UniPoly sum = UniPoly::constant(Rational(1)) + cur;
  for (long k = 2; k <= q; ++k) {
    UniPoly next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
    sum += cur;
  }
  return sum;
}

}  // namespace galoisrad
