#include <algorithm>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "qkent/states.hpp"

using namespace qkent;
using states::StateFamily;

namespace {

// Analytic spectrum vs numerical eigenvalues, as multisets within 1e-10.
void check_spectrum_oracle(const StateFamily& family) {
  const auto analytic = states::spectrum_analytic(family).expanded();
  const auto numeric = linalg::hermitian_eigenvalues(states::build(family).matrix());
  REQUIRE(analytic.size() == numeric.size());
  for (std::size_t i = 0; i < analytic.size(); ++i) {
    CHECK(std::abs(analytic[i] - numeric[i]) < 1e-10);
  }
}

std::vector<states::Weyl2> physical_weyl_grid() {
  std::vector<states::Weyl2> grid;
  for (int i = -4; i <= 4; ++i) {
    for (int j = -4; j <= 4; ++j) {
      for (int k = -4; k <= 4; ++k) {
        const states::Weyl2 w{i / 4.0, j / 4.0, k / 4.0};
        const auto lambdas = states::weyl_bell_eigenvalues(w);
        if (std::all_of(lambdas.begin(), lambdas.end(),
                        [](double l) { return l >= 0.0; })) {
          grid.push_back(w);
        }
      }
    }
  }
  return grid;
}

}  // namespace

TEST_CASE("family invariants") {
  CHECK_THROWS_AS(states::validate(StateFamily{states::Werner2{1.2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(states::validate(StateFamily{states::Werner2{-0.1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(states::validate(StateFamily{states::Weyl2{1.0, 1.0, 1.0}}),
                  std::invalid_argument);  // outside the physicality tetrahedron
  CHECK_NOTHROW(states::validate(StateFamily{states::Weyl2{-1.0, -1.0, -1.0}}));
  CHECK_THROWS_AS(states::validate(StateFamily{states::Isotropic{1, 0.5}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(states::validate(StateFamily{states::Isotropic{3, 1.5}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(states::validate(StateFamily{states::WernerD{4, -1.0001}}),
                  std::invalid_argument);
}

TEST_CASE("build basics") {
  const auto mixed = states::build(states::Werner2{0.0});
  CHECK(mixed.matrix().isApprox(linalg::MatrixXcd::Identity(4, 4) / 4.0, 1e-14));

  // F = 1 isotropic state is the rank-1 projector on psi+
  const auto pure = states::build(states::Isotropic{2, 1.0});
  const auto ev = linalg::hermitian_eigenvalues(pure.matrix());
  CHECK(ev[3] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(ev[2]) < 1e-12);

  // Weyl(-1,-1,-1) is the p = 1 Werner state, entrywise
  const auto weyl = states::build(states::Weyl2{-1.0, -1.0, -1.0});
  const auto werner = states::build(states::Werner2{1.0});
  CHECK((weyl.matrix() - werner.matrix()).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(states::build(states::Isotropic{17, 0.5}), std::invalid_argument);
}

TEST_CASE("werner2 equals weyl2(-p,-p,-p) entrywise on a grid") {
  for (int i = 0; i <= 10; ++i) {
    const double p = i / 10.0;
    const auto weyl = states::build(states::Weyl2{-p, -p, -p});
    const auto werner = states::build(states::Werner2{p});
    CHECK((weyl.matrix() - werner.matrix()).cwiseAbs().maxCoeff() < 1e-16);
  }
}

TEST_CASE("spectrum_analytic closed forms") {
  const auto singlet = states::spectrum_analytic(states::Werner2{1.0}).expanded();
  CHECK(singlet[0] == 0.0);
  CHECK(singlet[1] == 0.0);
  CHECK(singlet[2] == 0.0);
  CHECK(singlet[3] == doctest::Approx(1.0));

  const auto iso = states::spectrum_analytic(states::Isotropic{3, 0.5});
  REQUIRE(iso.lines().size() == 2);
  CHECK(iso.lines()[0].value == doctest::Approx(0.5));
  CHECK(iso.lines()[0].multiplicity == 1);
  CHECK(iso.lines()[1].value == doctest::Approx(0.0625));
  CHECK(iso.lines()[1].multiplicity == 8);

  const auto wd = states::spectrum_analytic(states::WernerD{2, 1.0});
  REQUIRE(wd.lines().size() == 2);
  CHECK(wd.lines()[0].value == doctest::Approx(1.0 / 3.0));
  CHECK(wd.lines()[0].multiplicity == 3);
  CHECK(wd.lines()[1].value == doctest::Approx(0.0));
  CHECK(wd.lines()[1].multiplicity == 1);
}

TEST_CASE("spectrum oracle agreement across families") {
  for (int i = 0; i <= 20; ++i) {
    check_spectrum_oracle(StateFamily{states::Werner2{i / 20.0}});
  }
  for (const auto& w : physical_weyl_grid()) {
    check_spectrum_oracle(StateFamily{w});
  }
  for (int d = 2; d <= 8; ++d) {
    for (int i = 0; i <= 4; ++i) {
      check_spectrum_oracle(StateFamily{states::Isotropic{d, i / 4.0}});
      check_spectrum_oracle(StateFamily{states::WernerD{d, -1.0 + i * 0.5}});
    }
  }
}

TEST_CASE("reduced_b: all four families are locally maximally mixed") {
  const auto w = states::reduced_b(states::Werner2{0.7});
  REQUIRE(w.lines().size() == 1);
  CHECK(w.lines()[0].value == doctest::Approx(0.5));
  CHECK(w.lines()[0].multiplicity == 2);

  const auto iso = states::reduced_b(states::Isotropic{5, 0.3});
  CHECK(iso.lines()[0].value == doctest::Approx(0.2));
  CHECK(iso.lines()[0].multiplicity == 5);

  const auto wd = states::reduced_b(states::WernerD{4, -1.0});
  CHECK(wd.lines()[0].value == doctest::Approx(0.25));
  CHECK(wd.lines()[0].multiplicity == 4);

  // against the numerical partial trace
  for (const auto& family :
       {StateFamily{states::Werner2{0.3}}, StateFamily{states::Weyl2{0.2, 0.1, 0.4}},
        StateFamily{states::Isotropic{4, 0.8}}, StateFamily{states::WernerD{3, 0.5}}}) {
    const auto reduced =
        linalg::partial_trace(states::build(family), linalg::Subsystem::B);
    const auto numeric = linalg::hermitian_eigenvalues(reduced.matrix());
    const auto analytic = states::reduced_b(family).expanded();
    REQUIRE(numeric.size() == analytic.size());
    for (std::size_t i = 0; i < numeric.size(); ++i) {
      CHECK(std::abs(numeric[i] - analytic[i]) < 1e-12);
    }
  }
}

TEST_CASE("bloch decomposition of the named families") {
  const auto werner = states::bloch_decompose(states::build(states::Werner2{0.6}));
  CHECK(werner.a.cwiseAbs().maxCoeff() < 1e-14);
  CHECK(werner.b.cwiseAbs().maxCoeff() < 1e-14);
  CHECK((werner.t + 0.6 * Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-14);

  const auto weyl =
      states::bloch_decompose(states::build(states::Weyl2{0.5, -0.3, 0.1}));
  Eigen::Matrix3d expected = Eigen::Matrix3d::Zero();
  expected.diagonal() << 0.5, -0.3, 0.1;
  CHECK((weyl.t - expected).cwiseAbs().maxCoeff() < 1e-14);

  const auto mixed = states::bloch_decompose(states::build(states::Werner2{0.0}));
  CHECK(mixed.t.cwiseAbs().maxCoeff() < 1e-14);

  CHECK_THROWS_AS(states::bloch_decompose(states::build(states::Isotropic{3, 0.5})),
                  std::invalid_argument);
}

TEST_CASE("bloch round-trip is the identity on random two-qubit states") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    linalg::MatrixXcd g(4, 4);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
      }
    }
    linalg::MatrixXcd rho = g * g.adjoint();
    rho /= rho.trace().real();
    const linalg::DensityMatrix dm(2, 2, rho);
    const auto rebuilt = states::bloch_reconstruct(states::bloch_decompose(dm));
    CHECK((rebuilt.matrix() - rho).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("state text form") {
  const auto w = states::parse_state("werner2:p=0.5");
  CHECK(std::get<states::Werner2>(w).p == 0.5);
  CHECK(states::to_string(w) == "werner2:p=0.5");

  const auto weyl = states::parse_state("weyl2:t=0.1,0.2,0.3");
  CHECK(std::get<states::Weyl2>(weyl).t2 == 0.2);

  const auto iso = states::parse_state("iso:d=6,F=0.7");
  CHECK(std::get<states::Isotropic>(iso).d == 6);
  CHECK(std::get<states::Isotropic>(iso).fidelity == 0.7);

  const auto wd = states::parse_state("wernerd:d=4,x=-1");
  CHECK(std::get<states::WernerD>(wd).d == 4);
  CHECK(std::get<states::WernerD>(wd).x == -1.0);

  CHECK_THROWS_AS(states::parse_state("werner2:q=0.5"), std::invalid_argument);
  CHECK_THROWS_AS(states::parse_state("ghz:p=0.5"), std::invalid_argument);
  CHECK_THROWS_AS(states::parse_state("werner2:p=1.5"), std::invalid_argument);
  CHECK_THROWS_AS(states::parse_state("weyl2:t=1,1,1"), std::invalid_argument);
  CHECK_THROWS_AS(states::parse_state("iso:d=1,F=0.5"), std::invalid_argument);
  CHECK_THROWS_AS(states::parse_state("iso:d=2,F=x"), std::invalid_argument);
  CHECK_THROWS_AS(states::parse_state("werner2"), std::invalid_argument);
}
