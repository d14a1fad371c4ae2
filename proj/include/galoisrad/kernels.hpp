#pragma once

// Hot loops shared by the library, each with a serial reference version and
// an OpenMP version. Results do not depend on the execution mode: every
// kernel writes into preallocated slots indexed by input position.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "galoisrad/exact.hpp"
#include "galoisrad/mpoly.hpp"
#include "galoisrad/permgrp.hpp"

namespace galoisrad {

enum class Exec { Serial, Parallel };

/// Parallel when the library was built with OpenMP, otherwise Serial.
Exec default_exec();
/// Threads an OpenMP region would use (1 without OpenMP).
int kernel_threads();

namespace kernels {

/// Sorted-exponent terms of a symmetric polynomial in n roots; the key is the
/// packed monomial restricted to the root bytes.
using PartitionForm = std::map<MultiPoly::Monomial, Rational>;

/// Product of all factors, combined pairwise in a balanced tree.
MultiPoly product(std::span<const MultiPoly> factors, Exec exec);

/// Reduction of each partition form to e-exponent form (keys carry the
/// exponents of e1..en in the root bytes).
std::vector<PartitionForm> reduce_partition_forms(int n, std::span<const PartitionForm> forms, Exec exec);

/// sigma . f for each sigma.
std::vector<MultiPoly> permutation_images(const MultiPoly& f, std::span<const Permutation> perms, Exec exec);

/// phi_sigma = sum_i alpha^(i-1) x_sigma(i) on numeric roots.
std::vector<ApproxComplex> phi_values(std::span<const ApproxComplex> roots, const Rational& alpha,
                                      std::span<const Permutation> perms, Exec exec);

/// verify_product_identity(n) for n in [lo, hi]; entry i is for n = lo + i.
std::vector<std::uint8_t> cyclotomic_identity_range(long lo, long hi, Exec exec);

}  // namespace kernels
}  // namespace galoisrad
