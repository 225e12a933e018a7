/**
 * This code is part of qkent.
 *
 * (C) Copyright 2026 qkent contributors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qkent/fef.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

namespace qkent::fef {

namespace {

FefResult make_result(double value, Source source, std::string warning = {}) {
  return FefResult{value, value > 0.5, source, std::move(warning)};
}

double wernerd_fef(const states::WernerD& f, std::string* warning) {
  const double d = f.d;
  if (f.x >= 1.0 / d) {
    return (1.0 + f.x) / (d * (d + 1.0));
  }
  if (f.d % 2 == 0) {
    return (1.0 - f.x) / (d * (d - 1.0));
  }
  // Odd-d branch as printed; evaluates above 1 for part of the range, which
  // no fidelity can do. Clamped with a warning rather than reinterpreted.
  const double raw = (d * d - d * d * f.x + d * f.x + d - 2.0) / (d * (d - 1.0));
  if (raw > 1.0) {
    *warning = fmt::format(
        "odd-d branch value {} exceeds 1 at (d={}, x={}); clamped to 1", raw, f.d, f.x);
    return 1.0;
  }
  return raw;
}

}  // namespace

FefResult fef_tensor(const linalg::DensityMatrix& rho) {
  if (rho.dim_a() != 2 || rho.dim_b() != 2) {
    throw std::invalid_argument(fmt::format(
        "fef_tensor requires a 2x2 bipartition; got ({},{})", rho.dim_a(), rho.dim_b()));
  }
  const auto dec = states::bloch_decompose(rho);
  const auto sv = linalg::singular_values(dec.t.cast<std::complex<double>>());
  double trace_norm = 0.0;
  for (double s : sv) trace_norm += s;
  return make_result(0.25 * (1.0 + trace_norm), Source::TensorFormula);
}

FefResult fef_analytic(const states::StateFamily& family) {
  states::validate(family);
  return std::visit(
      [](const auto& f) -> FefResult {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, states::Werner2>) {
          return make_result((1.0 + 3.0 * f.p) / 4.0, Source::Analytic);
        } else if constexpr (std::is_same_v<T, states::Weyl2>) {
          return make_result(
              0.25 * (1.0 + std::abs(f.t1) + std::abs(f.t2) + std::abs(f.t3)),
              Source::Analytic);
        } else if constexpr (std::is_same_v<T, states::Isotropic>) {
          return make_result(f.fidelity, Source::Analytic);
        } else {
          std::string warning;
          const double value = wernerd_fef(f, &warning);
          return make_result(value, Source::Analytic, std::move(warning));
        }
      },
      family);
}

bool fef_consistency(const states::StateFamily& family) {
  const bool two_qubit = std::holds_alternative<states::Werner2>(family) ||
                         std::holds_alternative<states::Weyl2>(family);
  if (!two_qubit) {
    throw std::invalid_argument("fef_consistency is defined for 2x2 families only");
  }
  const double tensor = fef_tensor(states::build(family)).value;
  const double analytic = fef_analytic(family).value;
  return std::abs(tensor - analytic) <= 1e-10;
}

double max_sampled_overlap(const linalg::DensityMatrix& rho, int num_samples,
                           std::uint64_t seed) {
  if (rho.dim_a() != 2 || rho.dim_b() != 2) {
    throw std::invalid_argument("max_sampled_overlap requires a 2x2 bipartition");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  Eigen::Vector4cd psi_plus;
  psi_plus << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);

  double best = 0.0;
  for (int s = 0; s < num_samples; ++s) {
    // Haar-random U(2) via QR of a Ginibre matrix with phase-fixed R diagonal.
    Eigen::Matrix2cd g;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
      }
    }
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
    Eigen::Matrix2cd q = qr.householderQ();
    const Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < 2; ++j) {
      const std::complex<double> diag = r(j, j);
      if (std::abs(diag) > 0.0) q.col(j) *= diag / std::abs(diag);
    }
    const Eigen::Matrix4cd lifted =
        linalg::kron(q, Eigen::Matrix2cd::Identity());
    const double overlap =
        (psi_plus.adjoint() * lifted * rho.matrix() * lifted.adjoint() * psi_plus)(0)
            .real();
    best = std::max(best, overlap);
  }
  return best;
}

}  // namespace qkent::fef
