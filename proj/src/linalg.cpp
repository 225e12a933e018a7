/**
 * This code is part of qkent.
 *
 * (C) Copyright 2026 qkent contributors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qkent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>
#include <unsupported/Eigen/KroneckerProduct>

namespace qkent::linalg {

namespace {
constexpr int kMaxEigenSide = 256;
constexpr int kMaxSingularSide = 16;
}  // namespace

bool is_hermitian(const MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

std::vector<double> hermitian_eigenvalues(const MatrixXcd& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not square");
  }
  if (m.rows() > kMaxEigenSide) {
    throw std::invalid_argument(fmt::format(
        "hermitian_eigenvalues: side {} exceeds the cap of {}", m.rows(), kMaxEigenSide));
  }
  if (!is_hermitian(m)) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver failed");
  }
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

std::vector<double> singular_values(const MatrixXcd& m) {
  if (std::max(m.rows(), m.cols()) > kMaxSingularSide) {
    throw std::invalid_argument(fmt::format(
        "singular_values: side {} exceeds the cap of {}",
        std::max(m.rows(), m.cols()), kMaxSingularSide));
  }
  const MatrixXcd gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("singular_values: eigensolver failed");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(solver.eigenvalues().size()));
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    double ev = solver.eigenvalues()[i];
    if (ev < -1e-14) {
      throw std::runtime_error(fmt::format(
          "singular_values: Gram eigenvalue {} below the clamping floor", ev));
    }
    out.push_back(std::sqrt(std::max(ev, 0.0)));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

DensityMatrix::DensityMatrix(int dim_a, int dim_b, MatrixXcd matrix)
    : dim_a_(dim_a), dim_b_(dim_b), matrix_(std::move(matrix)) {
  if (dim_a_ < 1 || dim_b_ < 1) {
    throw std::invalid_argument("DensityMatrix: subsystem dimensions must be positive");
  }
  const Eigen::Index side = static_cast<Eigen::Index>(dim_a_) * dim_b_;
  if (matrix_.rows() != side || matrix_.cols() != side) {
    throw std::invalid_argument(fmt::format(
        "DensityMatrix: expected a {}x{} matrix for dims ({},{}), got {}x{}",
        side, side, dim_a_, dim_b_, matrix_.rows(), matrix_.cols()));
  }
  if (!is_hermitian(matrix_)) {
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian within 1e-12");
  }
  const double trace = matrix_.trace().real();
  if (std::abs(trace - 1.0) > 1e-12) {
    throw std::invalid_argument(fmt::format(
        "DensityMatrix: trace {} differs from 1 beyond 1e-12", trace));
  }
  const auto eigenvalues = hermitian_eigenvalues(matrix_);
  if (eigenvalues.front() < -1e-10) {
    throw std::invalid_argument(fmt::format(
        "DensityMatrix: minimum eigenvalue {} below the PSD slack of -1e-10",
        eigenvalues.front()));
  }
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  const int da = rho.dim_a();
  const int db = rho.dim_b();
  const MatrixXcd& m = rho.matrix();
  if (keep == Subsystem::A) {
    MatrixXcd out = MatrixXcd::Zero(da, da);
    for (int i = 0; i < da; ++i) {
      for (int j = 0; j < da; ++j) {
        for (int k = 0; k < db; ++k) {
          out(i, j) += m(i * db + k, j * db + k);
        }
      }
    }
    return DensityMatrix(da, 1, std::move(out));
  }
  MatrixXcd out = MatrixXcd::Zero(db, db);
  for (int i = 0; i < db; ++i) {
    for (int j = 0; j < db; ++j) {
      for (int k = 0; k < da; ++k) {
        out(i, j) += m(k * db + i, k * db + j);
      }
    }
  }
  return DensityMatrix(1, db, std::move(out));
}

}  // namespace qkent::linalg
