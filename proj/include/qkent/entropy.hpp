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

#include <optional>

#include "qkent/kdeform.hpp"
#include "qkent/spectrum.hpp"
#include "qkent/states.hpp"

namespace qkent::entropy {

// von Neumann entropy in bits: -sum m_i lambda_i log2 lambda_i, 0 log 0 = 0.
double von_neumann(const Spectrum& spec);

// Quantum Kaniadakis entropy (1/2a) sum m_i [lambda^(1-a) - lambda^(1+a)].
// Natively in natural-log units: its a -> 0 limit is -Tr[rho ln rho], so the
// classical sentinel dispatches to von_neumann converted by ln 2.
double k_entropy(kdeform::Alpha alpha, const Spectrum& spec);

// Conditional entropy S(A|B) = S(joint) - S(rho_B), conditioning on B.
double conditional_k(kdeform::Alpha alpha, const states::StateFamily& family);

// Mutual information S(rho_A) + S(rho_B) - S(joint); the four families all
// have equal maximally-mixed marginals, so this is 2 S(rho_B) - S(joint).
double mutual_k(kdeform::Alpha alpha, const states::StateFamily& family);

// Weyl conditional entropy recomputed from the printed unnormalized
// eigenvalue expressions. Absent when an expression is negative, where the
// required real power does not exist; this path is diagnostic only.
std::optional<double> weyl_conditional_paper_convention(kdeform::Alpha alpha,
                                                        const states::Weyl2& w);

struct EntropyReport {
  double alpha;
  double joint;
  double marginal_b;
  double conditional;  // joint - marginal_b by construction
  std::optional<double> mutual;
};

EntropyReport report(kdeform::Alpha alpha, const states::StateFamily& family);

}  // namespace qkent::entropy
