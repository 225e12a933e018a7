/**
 * This code is part of qkent.
 *
 * (C) Copyright 2026 qkent contributors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qkent/kdeform.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "qkent/roots.hpp"

namespace qkent::kdeform {

Alpha::Alpha(double value) : value_(value) {
  const bool deformed = value > 0.0 && value < 1.0;
  if (!(value == 0.0 || deformed)) {
    throw std::invalid_argument(fmt::format(
        "alpha must lie in (0,1), or be 0 for the classical limit; got {}", value));
  }
}

double kexp(Alpha alpha, double x) {
  if (alpha.classical_limit()) return std::exp(x);
  const double a = alpha.value();
  // exp(asinh(a x)/a) == (sqrt(1+a^2 x^2) + a x)^(1/a), stable for a x << 0.
  return std::exp(std::asinh(a * x) / a);
}

double klog(Alpha alpha, double x) {
  if (!(x > 0.0)) {
    throw std::domain_error(fmt::format("klog requires x > 0; got {}", x));
  }
  if (alpha.classical_limit()) return std::log(x);
  const double a = alpha.value();
  return std::sinh(a * std::log(x)) / a;
}

double khat(Alpha alpha, double x) {
  if (!(x >= 0.0)) {
    throw std::domain_error(fmt::format("khat requires x >= 0; got {}", x));
  }
  if (x == 0.0) return 0.0;
  const double a = alpha.value();
  return std::pow(x, 1.0 - a) - std::pow(x, 1.0 + a);
}

double khat_raw(double order, double x) {
  if (!(x >= 0.0)) {
    throw std::domain_error(fmt::format("khat_raw requires x >= 0; got {}", x));
  }
  if (x == 0.0) {
    if (1.0 - order > 0.0 && 1.0 + order > 0.0) return 0.0;
    throw std::domain_error(
        fmt::format("khat_raw at x = 0 needs positive exponents; order = {}", order));
  }
  return std::pow(x, 1.0 - order) - std::pow(x, 1.0 + order);
}

double khat_derivative(Alpha alpha, double x) {
  if (!(x > 0.0)) {
    throw std::domain_error(fmt::format("khat_derivative requires x > 0; got {}", x));
  }
  const double a = alpha.value();
  return (1.0 - a) * std::pow(x, -a) - (1.0 + a) * std::pow(x, a);
}

double fhat(Alpha alpha) {
  if (alpha.classical_limit()) return std::exp(-1.0);
  const double a = alpha.value();
  return std::pow((1.0 - a) / (1.0 + a), 1.0 / (2.0 * a));
}

std::optional<double> rising_companion(Alpha alpha, double target) {
  if (alpha.classical_limit()) {
    throw std::invalid_argument("rising_companion requires alpha in (0,1)");
  }
  const double peak_x = fhat(alpha);
  const double peak = khat(alpha, peak_x);
  if (!(target > 0.0) || target > peak) return std::nullopt;
  if (target == peak) return peak_x;
  // K is strictly increasing on (0, fhat) from 0 up to the peak, so the
  // bracket (0, fhat) always straddles the level set.
  const double root = roots::bisect(
      [&](double x) { return khat(alpha, x) - target; }, 0.0, peak_x);
  return root;
}

std::optional<double> ghat(Alpha alpha) {
  if (alpha.classical_limit()) {
    throw std::invalid_argument("ghat requires alpha in (0,1)");
  }
  return rising_companion(alpha, khat(alpha, 0.5));
}

KhatProfile profile(Alpha alpha) {
  return KhatProfile{alpha.value(), fhat(alpha), ghat(alpha), khat(alpha, 0.5)};
}

}  // namespace qkent::kdeform
