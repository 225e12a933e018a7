#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "qkent/kdeform.hpp"
#include "qkent/roots.hpp"

using namespace qkent::kdeform;

TEST_CASE("alpha domain") {
  CHECK_NOTHROW(Alpha(0.5));
  CHECK_NOTHROW(Alpha(1e-9));
  CHECK(Alpha(0.0).classical_limit());
  CHECK(Alpha::classical().classical_limit());
  CHECK_THROWS_AS(Alpha(1.0), std::invalid_argument);
  CHECK_THROWS_AS(Alpha(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(Alpha(1.5), std::invalid_argument);
  CHECK_THROWS_AS(Alpha(std::nan("")), std::invalid_argument);
}

TEST_CASE("kexp basics") {
  CHECK(kexp(Alpha::classical(), 0.0) == doctest::Approx(1.0));
  CHECK(kexp(Alpha(0.5), 0.0) == doctest::Approx(1.0));
  // inverse-pair check with klog as the oracle
  const double v = kexp(Alpha(0.5), 1.0);
  CHECK(std::abs(klog(Alpha(0.5), v) - 1.0) < 1e-12);
}

TEST_CASE("klog basics") {
  CHECK(klog(Alpha(0.3), 1.0) == doctest::Approx(0.0));
  CHECK(klog(Alpha::classical(), std::exp(1.0)) == doctest::Approx(1.0));
  // power form cross-checked against the sinh form
  const double power_form = (std::pow(2.0, 0.7) - std::pow(2.0, -0.7)) / 1.4;
  const double sinh_form = std::sinh(0.7 * std::log(2.0)) / 0.7;
  CHECK(klog(Alpha(0.7), 2.0) == doctest::Approx(power_form).epsilon(1e-14));
  CHECK(power_form == doctest::Approx(sinh_form).epsilon(1e-14));
  CHECK_THROWS_AS(klog(Alpha(0.3), 0.0), std::domain_error);
  CHECK_THROWS_AS(klog(Alpha(0.3), -1.0), std::domain_error);
}

TEST_CASE("khat hand values and domain") {
  CHECK(khat(Alpha(0.5), 1.0) == 0.0);
  CHECK(khat(Alpha(0.5), 0.0) == 0.0);
  CHECK(khat(Alpha(0.5), 0.25) == doctest::Approx(0.375).epsilon(1e-14));
  CHECK_THROWS_AS(khat(Alpha(0.5), -0.1), std::domain_error);
  CHECK(khat_raw(1.3, 0.5) ==
        doctest::Approx(std::pow(0.5, -0.3) - std::pow(0.5, 2.3)).epsilon(1e-14));
  CHECK(khat_raw(0.5, 0.0) == 0.0);
  CHECK_THROWS_AS(khat_raw(1.5, 0.0), std::domain_error);
}

TEST_CASE("khat derivative matches finite differences and vanishes at fhat") {
  for (double a : {0.1, 0.5, 0.9}) {
    const Alpha alpha(a);
    CHECK(std::abs(khat_derivative(alpha, fhat(alpha))) < 1e-10);
  }
  const Alpha alpha(0.5);
  const double h = 1e-6;
  for (double x : {0.9, 0.01}) {
    const double fd = (khat(alpha, x + h) - khat(alpha, x - h)) / (2.0 * h);
    const double exact = khat_derivative(alpha, x);
    CHECK(std::abs(fd - exact) <= 1e-5 * std::max(1.0, std::abs(exact)));
  }
  CHECK(khat_derivative(alpha, 0.9) < 0.0);
  CHECK(khat_derivative(alpha, 0.01) > 0.0);
  CHECK_THROWS_AS(khat_derivative(alpha, 0.0), std::domain_error);
}

TEST_CASE("fhat: limit, closed form, bounds, monotonicity") {
  CHECK(std::abs(fhat(Alpha::classical()) - std::exp(-1.0)) < 1e-15);
  CHECK(std::abs(fhat(Alpha::classical()) - 0.367) < 1e-3);
  CHECK(std::abs(fhat(Alpha(1e-6)) - std::exp(-1.0)) < 1e-6);
  CHECK(fhat(Alpha(0.5)) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  double prev = 1.0;
  for (int i = 1; i <= 99; ++i) {
    const double f = fhat(Alpha(i / 100.0));
    CHECK(f < 0.368);
    CHECK(f < 0.5);
    CHECK(f < prev);
    prev = f;
  }
}

TEST_CASE("ghat: defining equality, derivative sign, grid-scan oracle") {
  for (int i = 1; i <= 19; ++i) {
    const Alpha alpha(i / 20.0);
    const auto g = ghat(alpha);
    REQUIRE(g.has_value());
    CHECK(std::abs(khat(alpha, *g) - khat(alpha, 0.5)) < 1e-10);
    CHECK(khat_derivative(alpha, *g) > 0.0);
    CHECK(*g > 0.0);
    CHECK(*g < fhat(alpha));
  }

  // Independent oracle: 2000-point scan over (0, fhat) bracketing the level
  // set of khat(1/2), refined by bisection on the scan bracket.
  const Alpha alpha(0.5);
  const double target = khat(alpha, 0.5);
  const double top = fhat(alpha);
  double lo = 0.0, hi = top;
  for (int i = 1; i <= 2000; ++i) {
    const double x = top * i / 2000.0;
    if (khat(alpha, x) >= target) {
      lo = top * (i - 1) / 2000.0;
      hi = x;
      break;
    }
  }
  const double scanned = qkent::roots::bisect(
      [&](double x) { return khat(alpha, x) - target; }, lo, hi, 1e-14, 400);
  CHECK(std::abs(scanned - *ghat(alpha)) < 1e-9);

  CHECK_THROWS_AS(ghat(Alpha::classical()), std::invalid_argument);
}

TEST_CASE("profile invariants") {
  for (double a : {0.05, 0.3, 0.6, 0.95}) {
    const auto prof = profile(Alpha(a));
    REQUIRE(prof.ghat.has_value());
    CHECK(0.0 < *prof.ghat);
    CHECK(*prof.ghat < prof.fhat);
    CHECK(prof.fhat < 0.5);
    CHECK(prof.khat_at_half > 0.0);
  }
}

TEST_CASE("property: klog(kexp(x)) = x on [-5,5]") {
  std::mt19937_64 rng(20260809);
  std::uniform_real_distribution<double> alpha_dist(1e-3, 1.0 - 1e-3);
  std::uniform_real_distribution<double> x_dist(-5.0, 5.0);
  for (int i = 0; i < 2000; ++i) {
    const Alpha alpha(alpha_dist(rng));
    const double x = x_dist(rng);
    CHECK(std::abs(klog(alpha, kexp(alpha, x)) - x) < 1e-9);
  }
}

TEST_CASE("property: classical limit of klog") {
  const Alpha alpha(1e-6);
  for (int i = 0; i <= 99; ++i) {
    const double x = 0.1 + i * 0.1;
    CHECK(std::abs(klog(alpha, x) - std::log(x)) < 1e-5);
  }
}

TEST_CASE("property: half-argument identity") {
  // K_{a+1}(x) + K_{a-1}(x) - K_{a/2}(x^2) = x^-a - x^a
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> alpha_dist(1e-3, 1.0 - 1e-3);
  std::uniform_real_distribution<double> x_dist(1e-3, 1.0);
  auto check_identity = [](double a, double x) {
    const double lhs =
        khat_raw(a + 1.0, x) + khat_raw(a - 1.0, x) - khat_raw(a / 2.0, x * x);
    const double rhs = std::pow(x, -a) - std::pow(x, a);
    CHECK(std::abs(lhs - rhs) < 1e-10);
  };
  for (int i = 1; i <= 19; ++i) check_identity(i / 20.0, 0.5);
  for (int i = 0; i < 1000; ++i) check_identity(alpha_dist(rng), x_dist(rng));
}

TEST_CASE("property: unimodality of khat") {
  for (double a : {0.1, 0.5, 0.9}) {
    const Alpha alpha(a);
    const double peak = fhat(alpha);
    for (int i = 1; i <= 1000; ++i) {
      const double x = i / 1000.0;
      if (x < peak) {
        CHECK(khat_derivative(alpha, x) > 0.0);
      } else if (x > peak) {
        CHECK(khat_derivative(alpha, x) < 0.0);
      }
    }
    // decreasing past 1/2 in particular
    CHECK(khat(alpha, 0.9) < khat(alpha, 0.6));
    CHECK(khat(alpha, 0.6) < khat(alpha, 0.5));
  }
}

TEST_CASE("rising_companion edge cases") {
  const Alpha alpha(0.4);
  CHECK_FALSE(rising_companion(alpha, -0.5).has_value());
  CHECK_FALSE(rising_companion(alpha, 0.0).has_value());
  const double peak = khat(alpha, fhat(alpha));
  CHECK_FALSE(rising_companion(alpha, peak * 1.0001).has_value());
  const auto at_peak = rising_companion(alpha, peak);
  REQUIRE(at_peak.has_value());
  CHECK(*at_peak == doctest::Approx(fhat(alpha)).epsilon(1e-12));
}
