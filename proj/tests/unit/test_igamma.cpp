#include <doctest.h>

#include <cmath>

#include "core/errors.hpp"
#include "core/igamma.hpp"
#include "support/igamma_oracle.hpp"

using namespace wp;

TEST_CASE("zero statistic has survival 1") {
  for (int df = 1; df <= 20; ++df) CHECK(chi_square_survival(0.0, df) == 1.0);
}

TEST_CASE("reference statistic reproduces the reference p-value") {
  // 12.59 with 3 degrees of freedom -> 0.005613
  CHECK(std::fabs(chi_square_survival(12.59, 3) - 0.005613) < 1e-5);
}

TEST_CASE("df=1 hand value") {
  // Q(0.5, x/2) = 2 * (1 - Phi(sqrt(x))) = erfc(sqrt(x/2))
  CHECK(std::fabs(chi_square_survival(6.6667, 1) - 0.00982) < 1e-4);
  for (double x : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    CHECK(std::fabs(chi_square_survival(x, 1) - std::erfc(std::sqrt(x / 2.0))) < 1e-13);
  }
}

TEST_CASE("df=2 and df=4 closed forms") {
  for (double x : {0.1, 0.5, 1.0, 3.0, 10.0, 50.0}) {
    CHECK(std::fabs(chi_square_survival(x, 2) - std::exp(-x / 2.0)) < 1e-13);
    CHECK(std::fabs(chi_square_survival(x, 4) - std::exp(-x / 2.0) * (1.0 + x / 2.0)) < 1e-13);
  }
}

TEST_CASE("monotone decreasing in the statistic") {
  for (int df : {1, 2, 3, 5, 10, 50}) {
    double prev = 1.0;
    for (double x = 0.25; x <= 60.0; x += 0.25) {
      double q = chi_square_survival(x, df);
      CHECK(q <= prev);
      prev = q;
    }
  }
}

TEST_CASE("agrees with the long-double oracle across the working range") {
  for (int df = 1; df <= 100; df += (df < 12 ? 1 : 7)) {
    for (double x : {0.01, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 120.0, 400.0, 1000.0}) {
      double got = chi_square_survival(x, df);
      double want = wptest::chi_square_survival_oracle(x, df);
      CAPTURE(df);
      CAPTURE(x);
      CHECK(std::fabs(got - want) <= 1e-10);
    }
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(chi_square_survival(-1.0, 3), InvalidArgumentError);
  CHECK_THROWS_AS(chi_square_survival(1.0, 0), InvalidArgumentError);
  CHECK_THROWS_AS(regularized_gamma_q(0.0, 1.0), InvalidArgumentError);
  CHECK_THROWS_AS(regularized_gamma_q(1.0, -0.5), InvalidArgumentError);
}
