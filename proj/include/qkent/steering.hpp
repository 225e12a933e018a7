/**
 * This code is part of qkent.
 *
 * (C) Copyright 2026 qkent contributors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qkent/bounds.hpp"
#include "qkent/kdeform.hpp"

namespace qkent::steering {

// Harmonic number H_n. Direct summation up to 10^6 terms, the asymptotic
// expansion ln n + gamma + 1/2n - 1/12n^2 + 1/120n^4 beyond.
double harmonic_number(std::int64_t n);

// Largest fidelity at which the d x d isotropic state still admits a local
// hidden state model for projective measurements: ((1+d) H_d - d) / d^2.
double lhs_threshold_projective(int d);

// The POVM analogue as printed, (1 + ((d+1)/d)^d (3d-1)) / d^2. Evaluates
// above 1 at small d, which no fidelity bound can; kept verbatim and flagged
// by callers, never silently corrected.
double lhs_threshold_povm(int d);

struct SteeringThresholds {
  int d;
  double lhs_projective;
  double lhs_povm;
};

SteeringThresholds thresholds(int d);

// Fidelity above which k collective copies are steerable for projective
// measurements: the k-th root of the d^k-dimensional threshold, since the
// twirled k-copy state is isotropic in dimension d^k with fidelity F^k.
// At k = 1 this reduces exactly to lhs_threshold_projective(d). Requires
// d^k <= 2^30.
double kcopy_onset(int d, int k);

/// Fidelity window (f_low, f_high] where one copy admits an LHS model but
/// k copies violate a steering inequality.
struct SuperactivationWindow {
  int d;
  int k;
  double f_low;   // k-copy steerability onset
  double f_high;  // single-copy LHS ceiling
  bool nonempty;  // f_low < f_high
};

SuperactivationWindow superactivation_window(int d, int k);

// Smallest k with a nonempty window at this d; absent if none up to k_max.
std::optional<int> min_k_superactivation(int d, int k_max = 30);

// Smallest d with a nonempty window at this k; absent if none up to d_max.
std::optional<int> min_d_superactivation(int k, int d_max = 64);

/// Zero crossing of the conditional kappa-entropy of the isotropic state.
struct CriticalF {
  double alpha;
  int d;
  double f_star;
};

// Bisection on F in (1/d^2, 1); the sign change (positive near the
// maximally mixed point, negative near F = 1) is asserted before bisecting.
// The classical sentinel is evaluated at alpha = 1e-5, the operational
// reading of the tables' 0+ rows.
CriticalF critical_f(kdeform::Alpha alpha, int d);

struct TableCell {
  double alpha;
  int d;
  double critical_f;
};

std::vector<TableCell> critical_f_table(const std::vector<double>& alphas,
                                        const std::vector<int>& ds);

// CSV rendering: header alpha,d,critical_F, fixed six decimals.
std::string table_csv(const std::vector<TableCell>& cells);

// Negative conditional kappa-entropy as a k-copy steerability certificate
// for the isotropic state. Hypotheses: (d = 2, k >= 7) or (d >= 6, k = 2).
bounds::BoundVerdict proposition_check(kdeform::Alpha alpha, int d, int k,
                                       double fidelity);

// (alpha, F) sweeps over the propositions' hypothesis cases.
bounds::CertificationResult certify_propositions();

struct LimitPoint {
  int d;
  double f_star;
};

/// Trend of critical_f(1e-5, d): the computed sequence, the value at d_max,
/// and the intercept of a least-squares fit f* = a + b / ln d, which
/// estimates the d -> infinity limit (1/2 analytically).
struct LimitEstimate {
  std::vector<LimitPoint> sequence;
  double at_dmax;
  double fitted_asymptote;
  bool strictly_decreasing;
};

// Dense in d up to 1000, log-spaced beyond; d_max capped at 10^4 where the
// analytic spectra keep everything closed-form.
LimitEstimate limit_estimate(int d_max);

}  // namespace qkent::steering
