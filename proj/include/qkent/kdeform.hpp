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

namespace qkent::kdeform {

/// Deformation parameter of the kappa-family. Valid values are the open
/// interval (0,1); the value 0 is a sentinel selecting the classical
/// (von Neumann / natural-log) limit of every deformed function.
class Alpha {
public:
  explicit Alpha(double value);
  static Alpha classical() { return Alpha{}; }

  double value() const { return value_; }
  bool classical_limit() const { return value_ == 0.0; }

private:
  Alpha() : value_(0.0) {}
  double value_;
};

// kappa-deformed exponential: (sqrt(1 + a^2 x^2) + a x)^(1/a), defined on all
// of R; exp(x) in the classical limit.
double kexp(Alpha alpha, double x);

// kappa-deformed logarithm: (x^a - x^-a) / (2a) = sinh(a ln x)/a for x > 0;
// ln(x) in the classical limit. Inverse of kexp.
double klog(Alpha alpha, double x);

// Entropy kernel K_a(x) = x^(1-a) - x^(1+a) for x >= 0, with 0^q := 0 for
// q > 0 so that K_a(0) = 0 and zero eigenvalues drop out of entropy sums.
double khat(Alpha alpha, double x);

// Same kernel evaluated with an arbitrary real order: x^(1-order) - x^(1+order).
// Orders outside (0,1) appear only inside algebraic identities (K_{a+1},
// K_{a-1}, K_{a/2}), never as entropy kernels. Requires x > 0 unless both
// exponents are positive.
double khat_raw(double order, double x);

// d/dx K_a(x) = (1-a) x^-a - (1+a) x^a, for x > 0.
double khat_derivative(Alpha alpha, double x);

// Location of the unique maximum of K_a on the positive reals:
// fhat(a) = ((1-a)/(1+a))^(1/2a). The classical sentinel returns the
// a -> 0+ limit, exp(-1) ~ 0.3679. Strictly decreasing in a, always < 1/2.
double fhat(Alpha alpha);

// Root of K_a(x) = target on the rising branch (0, fhat(a)), located by
// bracketed bisection to 1e-12 absolute. Absent when no such root exists,
// i.e. when target <= 0 or target exceeds the peak value K_a(fhat(a)).
std::optional<double> rising_companion(Alpha alpha, double target);

// Companion point of 1/2: the g in (0, fhat(a)) with K_a(g) = K_a(1/2).
// K_a'(g) > 0 by construction. Requires a deformed alpha.
std::optional<double> ghat(Alpha alpha);

/// Critical-point summary of the kernel K_a.
struct KhatProfile {
  double alpha;
  double fhat;
  std::optional<double> ghat;
  double khat_at_half;
};

KhatProfile profile(Alpha alpha);

}  // namespace qkent::kdeform
