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

#include <vector>

#include <Eigen/Dense>

namespace qkent::linalg {

using Eigen::MatrixXcd;

bool is_hermitian(const MatrixXcd& m, double tol = 1e-12);

// Real eigenvalues of a Hermitian matrix, ascending. Sides up to 256.
std::vector<double> hermitian_eigenvalues(const MatrixXcd& m);

// Singular values, descending; their sum is the trace norm. Computed as
// square roots of the eigenvalues of m^dag m, clamped at -1e-14. Sides up
// to 16 (the correlation tensors and Pauli blocks this library needs).
std::vector<double> singular_values(const MatrixXcd& m);

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b);

enum class Subsystem { A, B };

/// Bipartite density matrix on C^dim_a (x) C^dim_b: Hermitian within 1e-12,
/// unit trace within 1e-12, eigenvalues above -1e-10. Checked on construction.
class DensityMatrix {
public:
  DensityMatrix(int dim_a, int dim_b, MatrixXcd matrix);

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int side() const { return static_cast<int>(matrix_.rows()); }
  const MatrixXcd& matrix() const { return matrix_; }

private:
  int dim_a_;
  int dim_b_;
  MatrixXcd matrix_;
};

// Reduced state on the kept subsystem.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

}  // namespace qkent::linalg
