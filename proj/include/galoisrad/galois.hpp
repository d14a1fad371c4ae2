#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "galoisrad/exact.hpp"
#include "galoisrad/kernels.hpp"
#include "galoisrad/mpoly.hpp"
#include "galoisrad/permgrp.hpp"
#include "galoisrad/radex.hpp"
#include "galoisrad/upoly.hpp"

namespace galoisrad {

inline constexpr int kGaloisMaxDegree = 4;
inline constexpr int kAlphaTrials = 100;
inline constexpr int kMaxGaloisPrecision = 4096;

/// phi_1 = sum_i alpha^(i-1) x_i.
struct FundamentalFunction {
  int n = 0;
  Rational alpha;
  /// phi_sigma as a polynomial in the roots, with nparams extra variables.
  MultiPoly phi(const Permutation& sigma, int nparams = 0) const;
};

struct GaloisResolvent {
  /// prod over S_n of (y - phi_sigma), exact.
  UniPoly R;
  /// The irreducible factor of R vanishing at phi_id.
  UniPoly factor_of_phi1;
  /// Numeric phi_sigma, in the order of all_permutations(n).
  std::vector<ApproxComplex> phi_values;
};

/// Smallest integer alpha >= start whose n! numeric phi values are pairwise
/// farther apart than 2^(-precision/4). Throws ExhaustedCandidates after
/// kAlphaTrials integers.
Rational choose_alpha(const UniPoly& p, const Rational& start = Rational(1), int precision_bits = kDefaultPrecision);
Rational choose_alpha_for_roots(std::span<const ApproxComplex> roots, const Rational& start, int precision_bits);

/// R(y) by expanding the product over S_n symbolically, reducing each
/// y-coefficient to elementary symmetric functions and substituting the
/// coefficients of p. p monic, 1 <= deg p <= 4. factor_of_phi1 and
/// phi_values are left empty.
UniPoly exact_resolvent_poly(const UniPoly& p, const FundamentalFunction& f, Exec exec = default_exec());

struct GaloisOptions {
  /// Overrides choose_alpha; must still separate the phi values.
  std::optional<Rational> alpha;
  int precision_bits = kDefaultPrecision;
  Exec exec = default_exec();
};

struct GaloisGroupResult {
  PermGroup group;
  GaloisResolvent resolvent;
  Rational alpha;
  /// Root labeling x_1..x_n the permutations refer to.
  std::vector<ApproxComplex> roots;
  int precision_used = 0;
};

/// Galois group of a squarefree rational polynomial of degree <= 4 acting on
/// the roots labeled as numeric_roots orders them.
GaloisGroupResult galois_group(const UniPoly& p, const GaloisOptions& opts = {});

/// Same, for a caller-supplied labeling: roots_at(prec) must return the roots
/// of p in a fixed order at the requested precision.
GaloisGroupResult galois_group_for_roots(const UniPoly& p,
                                         const std::function<std::vector<ApproxComplex>(int)>& roots_at,
                                         const GaloisOptions& opts = {});

/// Full resolvent record (R, factor, phi values) for a fixed alpha.
GaloisResolvent exact_resolvent(const UniPoly& p, const FundamentalFunction& f,
                                int precision_bits = kDefaultPrecision);

/// One step of a field tower: adjoining `value` cuts the group to the
/// stabilizer of the corresponding function of the roots.
struct Adjunction {
  std::string name;
  /// Defining relation over the previous field.
  std::string relation;
  RadicalExpr value;
  std::size_t order_before = 0;
  std::size_t order_after = 0;
  std::size_t index() const { return order_after == 0 ? 0 : order_before / order_after; }
};

struct SolvabilityReport {
  UniPoly polynomial;
  PermGroup group;
  CompositionSeries series;
  bool solvable = false;
  std::optional<std::vector<RadicalExpr>> radical_roots;
  std::vector<Adjunction> tower;
  /// "resolvent", "biquadratic" or "supplied".
  std::string method;
  std::optional<Rational> alpha;
  std::vector<ApproxComplex> roots;
};

/// x^4 + a x^2 + b with the labeling x1 = -x2 = xi2, x3 = -x4 = xi3 where
/// xi1 = sqrt(a^2 - 4b), 2 xi2^2 = xi1 - a and 2 xi3^2 = -xi1 - a. Each
/// adjunction that shrinks the group contributes one step of the series.
SolvabilityReport biquadratic_chain(const Rational& a, const Rational& b, const GaloisOptions& opts = {});

/// Group, series, verdict and radical roots for a squarefree polynomial of
/// degree <= 4; biquadratic inputs take the tower path.
SolvabilityReport solvability_report(const UniPoly& p, const GaloisOptions& opts = {});

/// Series and verdict for a supplied group (any degree the group code allows).
SolvabilityReport solvability_report_for_group(const PermGroup& g);

}  // namespace galoisrad
