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

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qkent/kdeform.hpp"

namespace qkent::bounds {

struct Interval {
  double lo;
  double hi;
  bool lo_closed;
  bool hi_closed;

  bool empty() const;
  bool contains(double x) const;
};

/// Finite union of disjoint intervals over one real parameter.
class RegionSet {
public:
  RegionSet() = default;
  explicit RegionSet(std::vector<Interval> intervals);

  bool empty() const { return intervals_.empty(); }
  bool contains(double x) const;
  const std::vector<Interval>& intervals() const { return intervals_; }

private:
  std::vector<Interval> intervals_;
};

/// Executable record of one theorem instance: did the hypothesis hold, did
/// the claimed inequality hold, was the parameter outside the exception
/// region, and is the combination consistent with the theorem.
struct BoundVerdict {
  std::string theorem;
  std::vector<std::pair<std::string, double>> params;
  bool antecedent_holds = false;
  double bound_lhs = 0.0;
  double bound_rhs = 0.0;
  bool bound_holds = false;
  bool applicable = true;
  bool consistent = true;  // !(antecedent && applicable && !bound)
  std::vector<std::string> notes;
};

nlohmann::ordered_json to_json(const BoundVerdict& verdict);

// Exception region 1 over the Werner visibility p: the set where the
// monotonicity step of the usefulness argument fails. Equal to
// (0, (4 ghat(a) - 1)/3) when ghat(a) > 1/4 and empty otherwise; since
// K_a(1/4) > K_a(1/2) for every a in (0,1), ghat stays below 1/4 and the
// region is empty throughout. The construction is kept general anyway.
RegionSet exception_region1(kdeform::Alpha alpha);

// Bisection search for the alpha where ghat(alpha) crosses 1/4. Absent when
// ghat - 1/4 has one sign on the whole bracket (the analytic situation).
std::optional<double> region1_boundary_alpha(double alpha_lo = 1e-6,
                                             double alpha_hi = 1.0 - 1e-6);

// Exception regions 2 over each Weyl tensor component, built from the
// baseline theta = max_i 2(1-t_i) exactly as region 1 is built from 1/2.
// On physical tensors theta >= 4/3 makes K_a(theta) negative, so no rising-
// branch companion exists and all three regions come back empty.
std::array<RegionSet, 3> exception_region2(kdeform::Alpha alpha,
                                           const std::array<double, 3>& t);

BoundVerdict theorem1_check(kdeform::Alpha alpha, double p);

enum class MutualReading {
  UpperBounded,  // antecedent I <= eps, the reading the proof uses
  LowerBounded,  // antecedent I >= eps, the statement's parenthetical
};

BoundVerdict corollary11_check(kdeform::Alpha alpha, double p, double eps,
                               MutualReading reading = MutualReading::UpperBounded);

BoundVerdict theorem2_check(kdeform::Alpha alpha, double p);

BoundVerdict theorem3_check(kdeform::Alpha alpha, const std::array<double, 3>& t);

BoundVerdict theorem4_check(kdeform::Alpha alpha, const std::array<double, 3>& t,
                            bool contracted_union = false);

BoundVerdict theorem5_check(kdeform::Alpha alpha, int d, double fidelity);

BoundVerdict theorem6_check(kdeform::Alpha alpha, int d, int x);

struct CertificationResult {
  std::string theorem;
  long evaluated = 0;
  long inconsistent = 0;
  // Points where a non-usefulness conclusion would fire against FEF > 1/2
  // (theorem 2's semantic probe). Reported, not counted as inconsistencies.
  long semantic_flags = 0;
  std::vector<BoundVerdict> witnesses;  // first few inconsistent verdicts
};

// Desk-scale certification sweep on the default grids (scalar step 0.01,
// tensor step 0.05 per axis, alpha 0.05..0.95 step 0.05). Accepted ids:
// "1", "2", "3", "4", "5", "6", "c11".
CertificationResult certify(const std::string& theorem_id);

const std::vector<std::string>& certifiable_ids();

}  // namespace qkent::bounds
