/**
 * This code is part of qkent.
 *
 * (C) Copyright 2026 qkent contributors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qkent/steering.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "qkent/entropy.hpp"
#include "qkent/roots.hpp"
#include "qkent/states.hpp"

namespace qkent::steering {

namespace {

constexpr double kEulerGamma = 0.5772156649015329;
constexpr std::int64_t kDirectHarmonicCap = 1000000;
constexpr std::int64_t kPowerCap = std::int64_t{1} << 30;

std::int64_t checked_power(int d, int k) {
  std::int64_t value = 1;
  for (int i = 0; i < k; ++i) {
    value *= d;
    if (value > kPowerCap) {
      throw std::invalid_argument(fmt::format(
          "d^k = {}^{} exceeds the 2^30 cap on the harmonic-sum argument", d, k));
    }
  }
  return value;
}

// Single-copy LHS-projective threshold evaluated at an arbitrary (large)
// dimension; shared by the d- and d^k-dimensional paths.
double projective_threshold(std::int64_t dim) {
  const double dd = static_cast<double>(dim);
  return ((1.0 + dd) * harmonic_number(dim) - dd) / (dd * dd);
}

kdeform::Alpha effective_alpha(kdeform::Alpha alpha) {
  // Tables' 0+ rows are computed at 1e-5.
  return alpha.classical_limit() ? kdeform::Alpha(1e-5) : alpha;
}

double conditional_iso(kdeform::Alpha alpha, int d, double fidelity) {
  return entropy::conditional_k(alpha, states::Isotropic{d, fidelity});
}

}  // namespace

double harmonic_number(std::int64_t n) {
  if (n < 1) {
    throw std::invalid_argument(fmt::format("harmonic_number requires n >= 1; got {}", n));
  }
  if (n <= kDirectHarmonicCap) {
    double sum = 0.0;
    for (std::int64_t i = n; i >= 1; --i) {  // ascending magnitudes
      sum += 1.0 / static_cast<double>(i);
    }
    return sum;
  }
  const double x = static_cast<double>(n);
  return std::log(x) + kEulerGamma + 1.0 / (2.0 * x) - 1.0 / (12.0 * x * x) +
         1.0 / (120.0 * x * x * x * x);
}

double lhs_threshold_projective(int d) {
  if (d < 2) throw std::invalid_argument("lhs_threshold_projective requires d >= 2");
  return projective_threshold(d);
}

double lhs_threshold_povm(int d) {
  if (d < 2) throw std::invalid_argument("lhs_threshold_povm requires d >= 2");
  const double dd = d;
  return (1.0 + std::pow((dd + 1.0) / dd, dd) * (3.0 * dd - 1.0)) / (dd * dd);
}

SteeringThresholds thresholds(int d) {
  return SteeringThresholds{d, lhs_threshold_projective(d), lhs_threshold_povm(d)};
}

double kcopy_onset(int d, int k) {
  if (d < 2 || k < 1) {
    throw std::invalid_argument("kcopy_onset requires d >= 2 and k >= 1");
  }
  const std::int64_t dim = checked_power(d, k);
  const double rhs = projective_threshold(dim);
  return std::pow(rhs, 1.0 / static_cast<double>(k));
}

SuperactivationWindow superactivation_window(int d, int k) {
  const double f_low = kcopy_onset(d, k);
  const double f_high = lhs_threshold_projective(d);
  return SuperactivationWindow{d, k, f_low, f_high, f_low < f_high};
}

std::optional<int> min_k_superactivation(int d, int k_max) {
  for (int k = 1; k <= k_max; ++k) {
    if (superactivation_window(d, k).nonempty) return k;
  }
  return std::nullopt;
}

std::optional<int> min_d_superactivation(int k, int d_max) {
  for (int d = 2; d <= d_max; ++d) {
    if (superactivation_window(d, k).nonempty) return d;
  }
  return std::nullopt;
}

CriticalF critical_f(kdeform::Alpha alpha, int d) {
  if (d < 2) throw std::invalid_argument("critical_f requires d >= 2");
  const auto a = effective_alpha(alpha);
  const double dd = d;
  const double lo = 1.0 / (dd * dd) + 1e-6;
  const double hi = 1.0 - 1e-9;
  const double s_lo = conditional_iso(a, d, lo);
  const double s_hi = conditional_iso(a, d, hi);
  if (!(s_lo > 0.0) || !(s_hi < 0.0)) {
    throw std::runtime_error(fmt::format(
        "critical_f: no sign change on ({}, {}): S(lo)={}, S(hi)={}", lo, hi, s_lo,
        s_hi));
  }
  const double f_star = roots::bisect(
      [&](double f) { return conditional_iso(a, d, f); }, lo, hi, 1e-12);
  return CriticalF{a.value(), d, f_star};
}

std::vector<TableCell> critical_f_table(const std::vector<double>& alphas,
                                        const std::vector<int>& ds) {
  std::vector<TableCell> cells;
  cells.reserve(alphas.size() * ds.size());
  for (double a : alphas) {
    for (int d : ds) {
      cells.push_back(TableCell{a, d, critical_f(kdeform::Alpha(a), d).f_star});
    }
  }
  return cells;
}

std::string table_csv(const std::vector<TableCell>& cells) {
  std::string out = "alpha,d,critical_F\n";
  for (const auto& cell : cells) {
    out += fmt::format("{:.6f},{},{:.6f}\n", cell.alpha, cell.d, cell.critical_f);
  }
  return out;
}

bounds::BoundVerdict proposition_check(kdeform::Alpha alpha, int d, int k,
                                       double fidelity) {
  const bool low_dim = d == 2 && k >= 7;
  const bool few_copies = d >= 6 && k == 2;
  if (!low_dim && !few_copies) {
    throw std::invalid_argument(fmt::format(
        "proposition_check covers (d=2, k>=7) and (d>=6, k=2); got (d={}, k={})", d, k));
  }
  const auto a = effective_alpha(alpha);
  states::validate(states::StateFamily{states::Isotropic{d, fidelity}});

  bounds::BoundVerdict v;
  v.theorem = low_dim ? "proposition7" : "proposition8";
  v.params = {{"alpha", a.value()}, {"d", static_cast<double>(d)},
              {"k", static_cast<double>(k)}, {"F", fidelity}};
  v.antecedent_holds = conditional_iso(a, d, fidelity) < 0.0;
  v.bound_lhs = fidelity;
  v.bound_rhs = kcopy_onset(d, k);
  v.bound_holds = v.bound_lhs > v.bound_rhs;  // k-copy steerable
  v.applicable = true;
  v.consistent = !(v.antecedent_holds && !v.bound_holds);
  return v;
}

bounds::CertificationResult certify_propositions() {
  bounds::CertificationResult result;
  result.theorem = "propositions7-8";
  const std::vector<std::pair<int, int>> cases{{2, 7}, {2, 8}, {2, 9}, {2, 10},
                                               {6, 2}, {7, 2}, {8, 2}};
  for (const auto& [d, k] : cases) {
    for (int i = 1; i <= 19; ++i) {
      for (int j = 0; j <= 100; ++j) {
        const auto v = proposition_check(kdeform::Alpha(i / 20.0), d, k, j / 100.0);
        ++result.evaluated;
        if (!v.consistent) {
          ++result.inconsistent;
          if (result.witnesses.size() < 5) result.witnesses.push_back(v);
        }
      }
    }
  }
  return result;
}

LimitEstimate limit_estimate(int d_max) {
  if (d_max < 2 || d_max > 10000) {
    throw std::invalid_argument("limit_estimate requires 2 <= d_max <= 10^4");
  }
  const kdeform::Alpha a(1e-5);
  std::vector<int> ds;
  for (int d = 2; d <= std::min(d_max, 1000); ++d) ds.push_back(d);
  int d = 1000;
  while (d < d_max) {
    d = std::min(d_max, static_cast<int>(d * 1.25) + 1);
    ds.push_back(d);
  }

  LimitEstimate est;
  est.sequence.reserve(ds.size());
  for (int dim : ds) {
    est.sequence.push_back(LimitPoint{dim, critical_f(a, dim).f_star});
  }
  est.at_dmax = est.sequence.back().f_star;
  est.strictly_decreasing = true;
  for (std::size_t i = 1; i < est.sequence.size(); ++i) {
    if (!(est.sequence[i].f_star < est.sequence[i - 1].f_star)) {
      est.strictly_decreasing = false;
      break;
    }
  }

  // Least-squares fit f* = a0 + b0 / ln d over d >= 10; a0 estimates the
  // d -> infinity limit.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  long n = 0;
  for (const auto& point : est.sequence) {
    if (point.d < 10) continue;
    const double x = 1.0 / std::log(static_cast<double>(point.d));
    sx += x;
    sy += point.f_star;
    sxx += x * x;
    sxy += x * point.f_star;
    ++n;
  }
  const double denom = n * sxx - sx * sx;
  est.fitted_asymptote = denom != 0.0 ? (sy * sxx - sx * sxy) / denom : est.at_dmax;
  return est;
}

}  // namespace qkent::steering
