/**
 * This code is part of qkent.
 *
 * (C) Copyright 2026 qkent contributors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qkent/states.hpp"

#include <charconv>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <fmt/format.h>

namespace qkent::states {

namespace {

using std::complex;
constexpr int kMaxMaterializedDim = 16;
constexpr double kPhysicalityTol = 1e-12;  // admits boundary states

double parse_real(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument(fmt::format("cannot parse {} from '{}'", what, text));
  }
  return value;
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument(fmt::format("cannot parse {} from '{}'", what, text));
  }
  return value;
}

std::string_view expect_key(std::string_view kv, std::string_view key) {
  const auto eq = kv.find('=');
  if (eq == std::string_view::npos || kv.substr(0, eq) != key) {
    throw std::invalid_argument(
        fmt::format("expected '{}=<value>', got '{}'", key, kv));
  }
  return kv.substr(eq + 1);
}

void check_qudit_dim(int d) {
  if (d < 2) {
    throw std::invalid_argument(fmt::format("qudit dimension must be >= 2; got {}", d));
  }
}

}  // namespace

const Eigen::Matrix2cd& pauli(int i) {
  static const std::array<Eigen::Matrix2cd, 4> sigma = [] {
    std::array<Eigen::Matrix2cd, 4> s;
    const complex<double> I(0.0, 1.0);
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -I, I, 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  if (i < 0 || i > 3) throw std::invalid_argument("pauli index must be 0..3");
  return sigma[static_cast<std::size_t>(i)];
}

std::array<double, 4> weyl_bell_eigenvalues(const Weyl2& w) {
  return {(1.0 - w.t1 - w.t2 - w.t3) / 4.0, (1.0 - w.t1 + w.t2 + w.t3) / 4.0,
          (1.0 + w.t1 - w.t2 + w.t3) / 4.0, (1.0 + w.t1 + w.t2 - w.t3) / 4.0};
}

std::array<double, 4> weyl_paper_eigenvalues(const Weyl2& w) {
  return {w.t1 + w.t2 + w.t3 - 1.0, w.t1 + w.t2 - w.t3 + 1.0,
          w.t1 - w.t2 + w.t3 + 1.0, -w.t1 + w.t2 + w.t3 + 1.0};
}

void validate(const StateFamily& family) {
  std::visit(
      [](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Werner2>) {
          if (!(f.p >= 0.0 && f.p <= 1.0)) {
            throw std::invalid_argument(
                fmt::format("werner2: p must lie in [0,1]; got {}", f.p));
          }
        } else if constexpr (std::is_same_v<T, Weyl2>) {
          for (double lambda : weyl_bell_eigenvalues(f)) {
            if (!(lambda >= -kPhysicalityTol)) {
              throw std::invalid_argument(fmt::format(
                  "weyl2: Bell eigenvalue {} negative, (t1,t2,t3)=({},{},{}) "
                  "lies outside the physicality tetrahedron",
                  lambda, f.t1, f.t2, f.t3));
            }
          }
        } else if constexpr (std::is_same_v<T, Isotropic>) {
          check_qudit_dim(f.d);
          if (!(f.fidelity >= 0.0 && f.fidelity <= 1.0)) {
            throw std::invalid_argument(
                fmt::format("iso: F must lie in [0,1]; got {}", f.fidelity));
          }
        } else {
          check_qudit_dim(f.d);
          if (!(f.x >= -1.0 && f.x <= 1.0)) {
            throw std::invalid_argument(
                fmt::format("wernerd: x must lie in [-1,1]; got {}", f.x));
          }
        }
      },
      family);
}

linalg::DensityMatrix build(const StateFamily& family) {
  validate(family);
  using linalg::MatrixXcd;
  return std::visit(
      [](const auto& f) -> linalg::DensityMatrix {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Werner2>) {
          MatrixXcd m = linalg::kron(pauli(0), pauli(0));
          for (int i = 1; i <= 3; ++i) {
            m -= f.p * linalg::kron(pauli(i), pauli(i));
          }
          return linalg::DensityMatrix(2, 2, m / 4.0);
        } else if constexpr (std::is_same_v<T, Weyl2>) {
          const std::array<double, 3> t{f.t1, f.t2, f.t3};
          MatrixXcd m = linalg::kron(pauli(0), pauli(0));
          for (int i = 1; i <= 3; ++i) {
            m += t[static_cast<std::size_t>(i - 1)] * linalg::kron(pauli(i), pauli(i));
          }
          return linalg::DensityMatrix(2, 2, m / 4.0);
        } else if constexpr (std::is_same_v<T, Isotropic>) {
          const int d = f.d;
          if (d > kMaxMaterializedDim) {
            throw std::invalid_argument(fmt::format(
                "iso: matrices are materialized for d <= {} only; use the "
                "analytic spectrum for d = {}",
                kMaxMaterializedDim, d));
          }
          Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d * d);
          for (int i = 0; i < d; ++i) {
            psi(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
          }
          const MatrixXcd proj = psi * psi.adjoint();
          const MatrixXcd noise =
              (MatrixXcd::Identity(d * d, d * d) - proj) / (d * d - 1.0);
          return linalg::DensityMatrix(d, d, f.fidelity * proj + (1.0 - f.fidelity) * noise);
        } else {
          const int d = f.d;
          if (d > kMaxMaterializedDim) {
            throw std::invalid_argument(fmt::format(
                "wernerd: matrices are materialized for d <= {} only; use the "
                "analytic spectrum for d = {}",
                kMaxMaterializedDim, d));
          }
          MatrixXcd swap = MatrixXcd::Zero(d * d, d * d);
          for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
              swap(i * d + j, j * d + i) = 1.0;
            }
          }
          const double dd = d;
          const double denom = dd * dd * dd - dd;
          MatrixXcd m = ((dd - f.x) / denom) * MatrixXcd::Identity(d * d, d * d) +
                        ((dd * f.x - 1.0) / denom) * swap;
          return linalg::DensityMatrix(d, d, std::move(m));
        }
      },
      family);
}

Spectrum spectrum_analytic(const StateFamily& family) {
  validate(family);
  return std::visit(
      [](const auto& f) -> Spectrum {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Werner2>) {
          return Spectrum({{(1.0 - f.p) / 4.0, 3}, {(1.0 + 3.0 * f.p) / 4.0, 1}});
        } else if constexpr (std::is_same_v<T, Weyl2>) {
          const auto lambdas = weyl_bell_eigenvalues(f);
          std::vector<SpectralLine> lines;
          lines.reserve(4);
          for (double lambda : lambdas) lines.push_back({lambda, 1});
          return Spectrum(std::move(lines));
        } else if constexpr (std::is_same_v<T, Isotropic>) {
          const double d2 = static_cast<double>(f.d) * f.d;
          return Spectrum({{f.fidelity, 1},
                           {(1.0 - f.fidelity) / (d2 - 1.0),
                            static_cast<std::int64_t>(d2) - 1}});
        } else {
          const double dd = f.d;
          const std::int64_t sym = static_cast<std::int64_t>(f.d) * (f.d + 1) / 2;
          const std::int64_t anti = static_cast<std::int64_t>(f.d) * (f.d - 1) / 2;
          return Spectrum({{(1.0 + f.x) / (dd * dd + dd), sym},
                           {(1.0 - f.x) / (dd * dd - dd), anti}});
        }
      },
      family);
}

Spectrum reduced_b(const StateFamily& family) {
  validate(family);
  return std::visit(
      [](const auto& f) -> Spectrum {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Werner2> || std::is_same_v<T, Weyl2>) {
          return Spectrum({{0.5, 2}});
        } else {
          return Spectrum({{1.0 / f.d, f.d}});
        }
      },
      family);
}

BlochDecomposition bloch_decompose(const linalg::DensityMatrix& rho) {
  if (rho.dim_a() != 2 || rho.dim_b() != 2) {
    throw std::invalid_argument(fmt::format(
        "bloch_decompose requires a 2x2 bipartition; got ({},{})",
        rho.dim_a(), rho.dim_b()));
  }
  BlochDecomposition dec;
  const auto& m = rho.matrix();
  for (int x = 1; x <= 3; ++x) {
    dec.a(x - 1) = (m * linalg::kron(pauli(x), pauli(0))).trace().real();
    dec.b(x - 1) = (m * linalg::kron(pauli(0), pauli(x))).trace().real();
    for (int y = 1; y <= 3; ++y) {
      dec.t(x - 1, y - 1) = (m * linalg::kron(pauli(x), pauli(y))).trace().real();
    }
  }
  return dec;
}

linalg::DensityMatrix bloch_reconstruct(const BlochDecomposition& dec) {
  linalg::MatrixXcd m = linalg::kron(pauli(0), pauli(0));
  for (int x = 1; x <= 3; ++x) {
    m += dec.a(x - 1) * linalg::kron(pauli(x), pauli(0));
    m += dec.b(x - 1) * linalg::kron(pauli(0), pauli(x));
    for (int y = 1; y <= 3; ++y) {
      m += dec.t(x - 1, y - 1) * linalg::kron(pauli(x), pauli(y));
    }
  }
  return linalg::DensityMatrix(2, 2, m / 4.0);
}

StateFamily parse_state(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument(fmt::format(
        "state '{}' missing the '<family>:<params>' separator", text));
  }
  const std::string_view family(text.data(), colon);
  const std::string_view params(text.data() + colon + 1, text.size() - colon - 1);

  StateFamily out;
  if (family == "werner2") {
    out = Werner2{parse_real(expect_key(params, "p"), "p")};
  } else if (family == "weyl2") {
    const auto value = expect_key(params, "t");
    const auto c1 = value.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : value.find(',', c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos) {
      throw std::invalid_argument(
          fmt::format("weyl2 expects t=<t1>,<t2>,<t3>; got '{}'", value));
    }
    out = Weyl2{parse_real(value.substr(0, c1), "t1"),
                parse_real(value.substr(c1 + 1, c2 - c1 - 1), "t2"),
                parse_real(value.substr(c2 + 1), "t3")};
  } else if (family == "iso" || family == "wernerd") {
    const auto comma = params.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument(
          fmt::format("{} expects two comma-separated parameters", family));
    }
    const int d = parse_int(expect_key(params.substr(0, comma), "d"), "d");
    const auto rest = params.substr(comma + 1);
    if (family == "iso") {
      out = Isotropic{d, parse_real(expect_key(rest, "F"), "F")};
    } else {
      out = WernerD{d, parse_real(expect_key(rest, "x"), "x")};
    }
  } else {
    throw std::invalid_argument(fmt::format(
        "unknown state family '{}'; expected werner2, weyl2, iso or wernerd",
        family));
  }
  validate(out);
  return out;
}

std::string to_string(const StateFamily& family) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Werner2>) {
          return fmt::format("werner2:p={}", f.p);
        } else if constexpr (std::is_same_v<T, Weyl2>) {
          return fmt::format("weyl2:t={},{},{}", f.t1, f.t2, f.t3);
        } else if constexpr (std::is_same_v<T, Isotropic>) {
          return fmt::format("iso:d={},F={}", f.d, f.fidelity);
        } else {
          return fmt::format("wernerd:d={},x={}", f.d, f.x);
        }
      },
      family);
}

}  // namespace qkent::states
