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
#include <string>
#include <variant>

#include <Eigen/Dense>

#include "qkent/linalg.hpp"
#include "qkent/spectrum.hpp"

namespace qkent::states {

/// Visibility-p two-qubit Werner state, p in [0,1].
struct Werner2 {
  double p;
};

/// Bell-diagonal two-qubit state with diagonal correlation tensor (t1,t2,t3);
/// physical iff all four Bell eigenvalues are nonnegative.
struct Weyl2 {
  double t1;
  double t2;
  double t3;
};

/// d x d isotropic state of fidelity F with the maximally entangled state.
struct Isotropic {
  int d;
  double fidelity;
};

/// Two-qudit Werner state built from identity and the swap operator,
/// x in [-1,1].
struct WernerD {
  int d;
  double x;
};

using StateFamily = std::variant<Werner2, Weyl2, Isotropic, WernerD>;

// Throws std::invalid_argument naming the violated invariant.
void validate(const StateFamily& family);

// Concrete density matrix. Qudit families are materialized for d <= 16 only;
// beyond that use the analytic spectra.
linalg::DensityMatrix build(const StateFamily& family);

// Closed-form joint spectrum (Bell-diagonal convention for Weyl states).
Spectrum spectrum_analytic(const StateFamily& family);

// Spectrum of the reduced state on B: all four families are locally
// maximally mixed, {1/2 x2} or {1/d xd}.
Spectrum reduced_b(const StateFamily& family);

// The four Bell-basis eigenvalues of a Weyl state, each carrying the 1/4
// normalization that makes them a probability vector.
std::array<double, 4> weyl_bell_eigenvalues(const Weyl2& w);

// The same four combinations as printed without normalization and with the
// singlet term sign-flipped: {t1+t2+t3-1, t1+t2-t3+1, t1-t2+t3+1,
// -t1+t2+t3+1}. Kept as a labeled secondary path; not a probability vector.
std::array<double, 4> weyl_paper_eigenvalues(const Weyl2& w);

/// Pauli expansion of a two-qubit state: local Bloch vectors a, b and the
/// 3x3 correlation tensor T with T(x,y) = Tr[rho (sigma_x (x) sigma_y)].
struct BlochDecomposition {
  Eigen::Vector3d a;
  Eigen::Vector3d b;
  Eigen::Matrix3d t;
};

BlochDecomposition bloch_decompose(const linalg::DensityMatrix& rho);
linalg::DensityMatrix bloch_reconstruct(const BlochDecomposition& dec);

// Pauli matrices; index 0 is the identity.
const Eigen::Matrix2cd& pauli(int i);

// Compact text form used by the CLI: werner2:p=0.5, weyl2:t=0.1,0.2,0.3,
// iso:d=6,F=0.7, wernerd:d=4,x=-1. Unknown families or keys are rejected.
StateFamily parse_state(const std::string& text);
std::string to_string(const StateFamily& family);

}  // namespace qkent::states
