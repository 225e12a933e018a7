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
#include <string>

#include "qkent/linalg.hpp"
#include "qkent/states.hpp"

namespace qkent::fef {

enum class Source { TensorFormula, Analytic };

/// Fully entangled fraction with the FEF > 1/2 teleportation-usefulness
/// predicate. `warning` is non-empty when a closed form had to be clamped
/// into [0,1] (the odd-d qudit Werner branch can print values above 1).
struct FefResult {
  double value;
  bool useful_for_teleportation;
  Source source;
  std::string warning;
};

// FEF of a two-qubit state via the correlation tensor: (1 + trace norm of T)/4.
FefResult fef_tensor(const linalg::DensityMatrix& rho);

// Closed-form FEF per family. The qudit Werner value dispatches on the
// parity of d and on x relative to 1/d.
FefResult fef_analytic(const states::StateFamily& family);

// True iff the tensor and analytic routes agree within 1e-10 (2x2 families).
bool fef_consistency(const states::StateFamily& family);

// Best overlap <psi+|(U (x) I) rho (U (x) I)^dag|psi+> over Haar-random
// single-qubit unitaries U. A randomized lower bound on the FEF, used as a
// test oracle against transcription errors in the closed forms.
double max_sampled_overlap(const linalg::DensityMatrix& rho, int num_samples,
                           std::uint64_t seed);

}  // namespace qkent::fef
