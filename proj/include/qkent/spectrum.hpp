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
#include <vector>

namespace qkent {

struct SpectralLine {
  double value;
  std::int64_t multiplicity;
};

/// Multiset of eigenvalues of a unit-trace positive matrix, stored as
/// (value, multiplicity) pairs so that analytically known spectra of large
/// states stay O(1) in size. Values within 1e-12 below zero are clamped to
/// zero; anything lower is rejected, as is a total weight away from 1.
class Spectrum {
public:
  explicit Spectrum(std::vector<SpectralLine> lines);

  const std::vector<SpectralLine>& lines() const { return lines_; }
  std::int64_t total_multiplicity() const;
  double weight() const;  // sum of value * multiplicity

  // Eigenvalues repeated per multiplicity, ascending. Guarded against
  // accidental expansion of the large analytic spectra.
  std::vector<double> expanded(std::int64_t max_size = 100000) const;

private:
  std::vector<SpectralLine> lines_;
};

}  // namespace qkent
