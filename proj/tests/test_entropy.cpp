#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "qkent/entropy.hpp"

using namespace qkent;
using kdeform::Alpha;
using states::StateFamily;

namespace {

// Literal transcriptions of the closed-form conditional entropies, written
// independently of the Spectrum path.
double werner_conditional_closed(double a, double p) {
  auto k = [a](double x) { return std::pow(x, 1 - a) - std::pow(x, 1 + a); };
  return (3.0 * k((1 - p) / 4) + k((1 + 3 * p) / 4) - 2.0 * k(0.5)) / (2 * a);
}

double weyl_conditional_closed(double a, double t1, double t2, double t3) {
  auto k = [a](double x) { return x <= 0.0 ? 0.0 : std::pow(x, 1 - a) - std::pow(x, 1 + a); };
  const double l1 = (1 - t1 - t2 - t3) / 4, l2 = (1 - t1 + t2 + t3) / 4;
  const double l3 = (1 + t1 - t2 + t3) / 4, l4 = (1 + t1 + t2 - t3) / 4;
  return (k(l1) + k(l2) + k(l3) + k(l4) - 2.0 * k(0.5)) / (2 * a);
}

double iso_conditional_closed(double a, int d, double F) {
  auto k = [a](double x) { return x <= 0.0 ? 0.0 : std::pow(x, 1 - a) - std::pow(x, 1 + a); };
  const double dd = d;
  return (k(F) + (dd * dd - 1) * k((1 - F) / (dd * dd - 1)) - dd * k(1 / dd)) / (2 * a);
}

double wernerd_conditional_closed(double a, int d, double x) {
  auto k = [a](double y) { return y <= 0.0 ? 0.0 : std::pow(y, 1 - a) - std::pow(y, 1 + a); };
  const double dd = d;
  return ((dd * dd + dd) / 2 * k((1 + x) / (dd * dd + dd)) +
          (dd * dd - dd) / 2 * k((1 - x) / (dd * dd - dd)) - dd * k(1 / dd)) /
         (2 * a);
}

std::vector<StateFamily> family_grid() {
  std::vector<StateFamily> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(states::Werner2{i / 20.0});
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; i + j <= 10; ++j) {
      for (int k = 0; i + j + k <= 10; ++k) {
        grid.push_back(states::Weyl2{i / 10.0, j / 10.0, k / 10.0});
      }
    }
  }
  for (int d = 2; d <= 8; ++d) {
    for (int i = 0; i <= 10; ++i) {
      grid.push_back(states::Isotropic{d, i / 10.0});
      grid.push_back(states::WernerD{d, -1.0 + i * 0.2});
    }
  }
  return grid;
}

}  // namespace

TEST_CASE("von Neumann entropy in bits") {
  CHECK(entropy::von_neumann(Spectrum({{1.0, 1}, {0.0, 3}})) == 0.0);
  CHECK(entropy::von_neumann(Spectrum({{0.25, 4}})) == doctest::Approx(2.0));
  CHECK(entropy::von_neumann(Spectrum({{0.5, 2}})) == doctest::Approx(1.0));
}

TEST_CASE("k_entropy basics") {
  for (double a : {0.1, 0.5, 0.9}) {
    CHECK(entropy::k_entropy(Alpha(a), Spectrum({{1.0, 1}, {0.0, 3}})) == 0.0);
  }
  // (1/2a) * 2 * khat(1/2) at a = 1/2 is 2(sqrt(1/2) - (1/2)^{3/2})
  CHECK(entropy::k_entropy(Alpha(0.5), Spectrum({{0.5, 2}})) ==
        doctest::Approx(0.7071067811865476).epsilon(1e-12));
  // classical sentinel: natural-log von Neumann
  const Spectrum spec({{0.25, 2}, {0.5, 1}});
  CHECK(entropy::k_entropy(Alpha::classical(), spec) ==
        doctest::Approx(entropy::von_neumann(spec) * std::numbers::ln2));
  CHECK_THROWS_AS(entropy::k_entropy(Alpha(0.5), Spectrum({{-0.1, 1}, {1.1, 1}})),
                  std::invalid_argument);
}

TEST_CASE("classical limit of k_entropy across grid spectra") {
  const Alpha near_zero(1e-5);
  for (const auto& family : family_grid()) {
    const auto spec = states::spectrum_analytic(family);
    const double vn_nats = entropy::von_neumann(spec) * std::numbers::ln2;
    CHECK(std::abs(entropy::k_entropy(near_zero, spec) - vn_nats) < 1e-4);
  }
}

TEST_CASE("conditional entropy examples") {
  // pure joint state: conditional = -S(marginal)
  CHECK(entropy::conditional_k(Alpha(0.5), states::Werner2{1.0}) ==
        doctest::Approx(-0.7071067811865476).epsilon(1e-12));

  // critical fidelity of the d=2 isotropic state near 0.811 at alpha -> 0
  const Alpha near_zero(1e-5);
  CHECK(std::abs(entropy::conditional_k(near_zero, states::Isotropic{2, 0.8107})) < 1e-3);
  CHECK(entropy::conditional_k(near_zero, states::Isotropic{2, 0.80}) > 0.0);
  CHECK(entropy::conditional_k(near_zero, states::Isotropic{2, 0.82}) < 0.0);

  // maximally mixed joint state has positive conditional entropy
  for (double a : {0.1, 0.5, 0.9}) {
    CHECK(entropy::conditional_k(Alpha(a), states::Werner2{0.0}) > 0.0);
  }
}

TEST_CASE("mutual information examples") {
  const Alpha near_zero(1e-5);
  CHECK(std::abs(entropy::mutual_k(near_zero, states::Werner2{0.0})) < 1e-4);
  CHECK(entropy::mutual_k(Alpha(0.5), states::Werner2{1.0}) ==
        doctest::Approx(1.4142135623730951).epsilon(1e-12));

  // algebraic identity: mutual = -conditional + S(rho_B)
  for (double a : {0.2, 0.6}) {
    for (double p : {0.0, 0.4, 0.9}) {
      const Alpha alpha(a);
      const states::Werner2 w{p};
      const double marginal =
          entropy::k_entropy(alpha, states::reduced_b(StateFamily{w}));
      CHECK(entropy::mutual_k(alpha, w) ==
            doctest::Approx(-entropy::conditional_k(alpha, w) + marginal)
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("closed-form agreement on parameter grids") {
  for (int ai = 1; ai <= 9; ++ai) {
    const double a = ai / 10.0;
    const Alpha alpha(a);
    for (int i = 0; i <= 10; ++i) {
      const double p = i / 10.0;
      CHECK(std::abs(entropy::conditional_k(alpha, states::Werner2{p}) -
                     werner_conditional_closed(a, p)) < 1e-12);
    }
    for (int i = 0; i <= 5; ++i) {
      for (int j = 0; i + j <= 5; ++j) {
        for (int k = 0; i + j + k <= 5; ++k) {
          CHECK(std::abs(entropy::conditional_k(
                             alpha, states::Weyl2{i / 5.0, j / 5.0, k / 5.0}) -
                         weyl_conditional_closed(a, i / 5.0, j / 5.0, k / 5.0)) <
                1e-12);
        }
      }
    }
    for (int d = 2; d <= 6; ++d) {
      for (int i = 0; i <= 4; ++i) {
        CHECK(std::abs(entropy::conditional_k(alpha, states::Isotropic{d, i / 4.0}) -
                       iso_conditional_closed(a, d, i / 4.0)) < 1e-12);
        CHECK(std::abs(
                  entropy::conditional_k(alpha, states::WernerD{d, -1 + i * 0.5}) -
                  wernerd_conditional_closed(a, d, -1 + i * 0.5)) < 1e-12);
      }
    }
  }
}

TEST_CASE("joint entropy is maximal at the maximally mixed member") {
  for (double a : {0.2, 0.5, 0.8}) {
    const Alpha alpha(a);
    auto joint = [&](const StateFamily& f) {
      return entropy::k_entropy(alpha, states::spectrum_analytic(f));
    };
    const double at_mixed = joint(states::Werner2{0.0});
    for (int i = 1; i <= 20; ++i) {
      CHECK(joint(states::Werner2{i / 20.0}) <= at_mixed + 1e-12);
    }
    const int d = 5;
    const double iso_mixed = joint(states::Isotropic{d, 1.0 / (d * d)});
    for (int i = 0; i <= 10; ++i) {
      CHECK(joint(states::Isotropic{d, i / 10.0}) <= iso_mixed + 1e-12);
    }
    const double wd_mixed = joint(states::WernerD{d, 1.0 / d});
    for (int i = 0; i <= 10; ++i) {
      CHECK(joint(states::WernerD{d, -1.0 + i * 0.2}) <= wd_mixed + 1e-12);
    }
  }
}

TEST_CASE("paper-convention Weyl path") {
  // defined only where every printed expression is nonnegative, i.e. on the
  // sum = 1 face for nonnegative tensors
  const states::Weyl2 face{0.5, 0.25, 0.25};
  const auto value = entropy::weyl_conditional_paper_convention(Alpha(0.5), face);
  REQUIRE(value.has_value());
  auto k = [](double x) { return x == 0.0 ? 0.0 : std::sqrt(x) - std::pow(x, 1.5); };
  const double expected = (k(0.0) + k(1.5) + k(1.5) + k(1.0) - 2 * k(0.5)) / 1.0;
  CHECK(*value == doctest::Approx(expected).epsilon(1e-12));

  // interior states have a negative printed expression: undefined
  CHECK_FALSE(entropy::weyl_conditional_paper_convention(Alpha(0.5),
                                                         states::Weyl2{0.2, 0.2, 0.2})
                  .has_value());
}

TEST_CASE("entropy report wiring") {
  const auto rep = entropy::report(Alpha(0.3), StateFamily{states::Werner2{0.5}});
  CHECK(rep.conditional == rep.joint - rep.marginal_b);
  REQUIRE(rep.mutual.has_value());
  CHECK(*rep.mutual == doctest::Approx(2 * rep.marginal_b - rep.joint));
}
