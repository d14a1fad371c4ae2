#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "galoisrad/exact.hpp"
#include "galoisrad/upoly.hpp"

namespace galoisrad {

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<Integer, int>> factor_integer(const Integer& n);

/// Deterministic for n < 3.3e24 (trial division to 1e6, then Miller-Rabin on
/// the first 13 prime bases). Above that bound, extra GMP rounds are added and
/// the answer is probabilistic.
bool is_prime(const Integer& n);

Integer euler_phi(const Integer& m);
int moebius(const Integer& k);
std::vector<long> divisors(long n);

inline constexpr long kCyclotomicMaxOrder = 10000;

/// Monic cyclotomic polynomial Z_m from the Moebius product formula.
UniPoly cyclotomic_poly(long m);
/// prod_{m | n} Z_m(x) == x^n - 1, checked exactly.
bool verify_product_identity(long n);

/// 2^(2^k) + 1 for k <= 6.
Integer fermat_number(int k);
bool is_power_of_two(const Integer& n);

enum class ConstructReason { PowerOfTwoTotient, CompositeFermat, OddFactor };
std::string_view reason_name(ConstructReason r);

struct ConstructibilityVerdict {
  Integer p;
  bool constructible = false;
  ConstructReason reason = ConstructReason::OddFactor;
};

/// Default mode: p must be prime (or a composite of the Fermat form 2^k + 1,
/// reported as composite-fermat); constructible iff p - 1 is a power of two.
/// Extended mode: any n >= 3, constructible iff phi(n) is a power of two.
ConstructibilityVerdict is_constructible_polygon(const Integer& p, bool extended = false);

/// R(Y) of degree (p-1)/2 with R(x + 1/x) x^((p-1)/2) = 1 + x + ... + x^(p-1).
UniPoly vandermonde_reduce(long p);

}  // namespace galoisrad
