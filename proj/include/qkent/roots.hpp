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

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qkent::roots {

/// Thrown when a bracketing solver is handed endpoints without a sign change.
class BracketError : public std::runtime_error {
public:
  BracketError(double lo, double hi, double f_lo, double f_hi)
      : std::runtime_error("no sign change on bracket [" + std::to_string(lo) +
                           ", " + std::to_string(hi) + "]: f(lo)=" +
                           std::to_string(f_lo) + ", f(hi)=" + std::to_string(f_hi)) {}
};

// Bracketed bisection for a sign-changing continuous f on [lo, hi].
// Returns the midpoint of the final bracket once its width drops below
// x_tol or the iteration cap is hit. Monotonicity of f is not required,
// only opposite signs at the endpoints.
template <class F>
double bisect(F&& f, double lo, double hi, double x_tol = 1e-12,
              int max_iter = 200) {
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::signbit(f_lo) == std::signbit(f_hi)) {
    throw BracketError(lo, hi, f_lo, f_hi);
  }
  for (int i = 0; i < max_iter && (hi - lo) > x_tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace qkent::roots
