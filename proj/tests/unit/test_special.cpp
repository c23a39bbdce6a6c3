#include <gtest/gtest.h>

#include <numbers>

#include "dml/special.hpp"

using namespace dml;

TEST(Special, GammaAtIntegersAndHalf) {
  double factorial = 1;
  for (int n = 1; n <= 15; ++n) {
    EXPECT_NEAR(gamma(cplx(n, 0)).real() / factorial, 1.0, 1e-13) << n;
    factorial *= n;
  }
  EXPECT_NEAR(gamma(cplx(0.5, 0)).real(), std::sqrt(std::numbers::pi), 1e-14);
  EXPECT_NEAR(gamma(cplx(-0.5, 0)).real(), -2.0 * std::sqrt(std::numbers::pi), 1e-13);
}

TEST(Special, GammaComplex) {
  const cplx value = gamma(cplx(1, 1));
  EXPECT_NEAR(value.real(), 0.49801566811835604, 1e-14);
  EXPECT_NEAR(value.imag(), -0.15494982830181069, 1e-14);
}

TEST(Special, GammaRecurrenceAndReflection) {
  for (double sigma : {-2.3, -0.7, 0.1, 0.25, 0.75, 1.3, 4.2}) {
    for (double t : {0.0, 0.5, 3.0, 17.0, 45.0}) {
      const cplx z(sigma, t);
      const cplx lhs = gamma(z + 1.0);
      const cplx rhs = z * gamma(z);
      EXPECT_LT(std::abs(lhs - rhs), 1e-12 * std::abs(rhs)) << z;
      const cplx reflection = gamma(z) * gamma(1.0 - z) * std::sin(std::numbers::pi * z);
      EXPECT_LT(std::abs(reflection - std::numbers::pi), 1e-11 * std::numbers::pi) << z;
    }
  }
}

TEST(Special, LogGammaExponentiates) {
  for (double t : {0.0, 2.0, 30.0}) {
    const cplx z(0.25, t);
    EXPECT_LT(std::abs(std::exp(log_gamma(z)) - gamma(z)), 1e-12 * std::abs(gamma(z)));
  }
  // Stirling: Re log Gamma(1/4 + 30i) ~ -pi*30/2 + (1/4 - 1/2) log 30 + log sqrt(2 pi)
  const double stirling = -std::numbers::pi * 15 - 0.25 * std::log(30.0) + 0.5 * std::log(2 * std::numbers::pi);
  EXPECT_NEAR(log_gamma(cplx(0.25, 30)).real(), stirling, 1e-3);
}

TEST(Special, Digamma) {
  constexpr double euler_gamma = 0.57721566490153286;
  EXPECT_NEAR(digamma(1.0), -euler_gamma, 1e-13);
  EXPECT_NEAR(digamma(0.5), -euler_gamma - 2 * std::log(2.0), 1e-13);
  for (double x : {0.1, 0.37, 2.5, 11.0}) EXPECT_NEAR(digamma(x + 1) - digamma(x), 1.0 / x, 1e-12);
}
