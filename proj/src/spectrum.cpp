/**
 * This code is part of qkent.
 *
 * (C) Copyright 2026 qkent contributors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qkent/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace qkent {

Spectrum::Spectrum(std::vector<SpectralLine> lines) : lines_(std::move(lines)) {
  if (lines_.empty()) {
    throw std::invalid_argument("Spectrum: no eigenvalues");
  }
  for (auto& line : lines_) {
    if (line.multiplicity <= 0) {
      throw std::invalid_argument("Spectrum: multiplicities must be positive");
    }
    if (line.value < -1e-12 || std::isnan(line.value)) {
      throw std::invalid_argument(fmt::format(
          "Spectrum: eigenvalue {} below the -1e-12 tolerance", line.value));
    }
    if (line.value < 0.0) line.value = 0.0;
  }
  const double w = weight();
  if (std::abs(w - 1.0) > 1e-10) {
    throw std::invalid_argument(
        fmt::format("Spectrum: total weight {} differs from 1 beyond 1e-10", w));
  }
}

std::int64_t Spectrum::total_multiplicity() const {
  std::int64_t total = 0;
  for (const auto& line : lines_) total += line.multiplicity;
  return total;
}

double Spectrum::weight() const {
  double w = 0.0;
  for (const auto& line : lines_) {
    w += line.value * static_cast<double>(line.multiplicity);
  }
  return w;
}

std::vector<double> Spectrum::expanded(std::int64_t max_size) const {
  if (total_multiplicity() > max_size) {
    throw std::length_error(fmt::format(
        "Spectrum: refusing to expand {} eigenvalues", total_multiplicity()));
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(total_multiplicity()));
  for (const auto& line : lines_) {
    out.insert(out.end(), static_cast<std::size_t>(line.multiplicity), line.value);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qkent
