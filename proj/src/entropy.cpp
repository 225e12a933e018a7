/**
 * This code is part of qkent.
 *
 * (C) Copyright 2026 qkent contributors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qkent/entropy.hpp"

#include <cmath>
#include <numbers>

namespace qkent::entropy {

double von_neumann(const Spectrum& spec) {
  double s = 0.0;
  for (const auto& line : spec.lines()) {
    if (line.value > 0.0) {
      s -= static_cast<double>(line.multiplicity) * line.value * std::log2(line.value);
    }
  }
  return s;
}

double k_entropy(kdeform::Alpha alpha, const Spectrum& spec) {
  if (alpha.classical_limit()) {
    return von_neumann(spec) * std::numbers::ln2;
  }
  double sum = 0.0;
  for (const auto& line : spec.lines()) {
    sum += static_cast<double>(line.multiplicity) * kdeform::khat(alpha, line.value);
  }
  return sum / (2.0 * alpha.value());
}

double conditional_k(kdeform::Alpha alpha, const states::StateFamily& family) {
  return k_entropy(alpha, states::spectrum_analytic(family)) -
         k_entropy(alpha, states::reduced_b(family));
}

double mutual_k(kdeform::Alpha alpha, const states::StateFamily& family) {
  return 2.0 * k_entropy(alpha, states::reduced_b(family)) -
         k_entropy(alpha, states::spectrum_analytic(family));
}

std::optional<double> weyl_conditional_paper_convention(kdeform::Alpha alpha,
                                                        const states::Weyl2& w) {
  if (alpha.classical_limit()) return std::nullopt;
  const double a = alpha.value();
  double sum = 0.0;
  for (double lambda : states::weyl_paper_eigenvalues(w)) {
    if (lambda < 0.0) return std::nullopt;  // real power undefined
    sum += kdeform::khat(alpha, lambda);
  }
  sum -= 2.0 * kdeform::khat(alpha, 0.5);
  return sum / (2.0 * a);
}

EntropyReport report(kdeform::Alpha alpha, const states::StateFamily& family) {
  const double joint = k_entropy(alpha, states::spectrum_analytic(family));
  const double marginal = k_entropy(alpha, states::reduced_b(family));
  EntropyReport rep;
  rep.alpha = alpha.value();
  rep.joint = joint;
  rep.marginal_b = marginal;
  rep.conditional = joint - marginal;
  rep.mutual = 2.0 * marginal - joint;
  return rep;
}

}  // namespace qkent::entropy
