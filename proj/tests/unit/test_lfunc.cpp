#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "dml/characters.hpp"
#include "dml/error.hpp"
#include "dml/lfunc.hpp"
#include "oracles.hpp"

using namespace dml;

namespace {

constexpr double kCatalan = 0.91596559417721901505;
constexpr double kPi = std::numbers::pi;

const DirichletCharacter& quadratic_mod5() {
  static const auto chars = enumerate_characters(5);
  for (const auto& chi : chars)
    if (chi.order() == 2) return chi;
  throw std::runtime_error("missing");
}

cplx direct_series(const DirichletCharacter& chi, cplx s, int terms) {
  cplx sum = 0;
  for (int n = terms; n >= 1; --n) sum += chi(n) * std::exp(-s * std::log(static_cast<double>(n)));
  return sum;
}

}  // namespace

TEST(Hurwitz, Examples) {
  EXPECT_NEAR(hurwitz_zeta({2, 0}, 1.0).real(), kPi * kPi / 6, 1e-13);
  EXPECT_NEAR(hurwitz_zeta({2, 0}, 0.5).real(), kPi * kPi / 2, 1e-12);
  EXPECT_NEAR(hurwitz_zeta({-1, 0}, 1.0).real(), -1.0 / 12.0, 1e-13);
  EXPECT_THROW(hurwitz_zeta({1, 0}, 0.5), PoleError);
  EXPECT_THROW(hurwitz_zeta({2, 0}, 0.0), DomainError);
  EXPECT_THROW(hurwitz_zeta({2, 0}, 1.5), DomainError);
}

TEST(Hurwitz, MatchesDirectSum) {
  for (double a : {0.1, 0.5, 0.9}) {
    for (cplx s : {cplx(2, 0), cplx(1.5, 3), cplx(3, -10)}) {
      const cplx expected = oracle::hurwitz_direct(s, a);
      EXPECT_LT(std::abs(hurwitz_zeta(EvalPoint::from(s), a) - expected), 1e-10) << s << " a=" << a;
    }
  }
}

TEST(Hurwitz, Recurrence) {
  for (double a : {0.05, 0.3, 0.77, 1.0}) {
    for (cplx s : {cplx(0.5, 0), cplx(0.5, 14.1), cplx(-0.5, 2), cplx(2.5, -7), cplx(0.2, 40)}) {
      const auto p = EvalPoint::from(s);
      const cplx diff = hurwitz_zeta_detailed(p, a).value - hurwitz_zeta_detailed(p, a + 1).value;
      EXPECT_LT(std::abs(diff - std::exp(-s * std::log(a))), 1e-10) << s << " a=" << a;
    }
  }
}

TEST(Hurwitz, ErrorEstimateAndTerms) {
  const auto r = hurwitz_zeta_detailed({0.5, 100}, 0.5);
  EXPECT_EQ(r.terms, 300);
  EXPECT_GE(r.error_estimate, 0.0);
  EXPECT_LT(r.error_estimate, 1e-12);
  EXPECT_EQ(hurwitz_zeta_detailed({0.5, 1}, 0.5).terms, 30);
}

TEST(Hurwitz, ConstantAtOne) {
  EXPECT_NEAR(hurwitz_constant_at_one(1.0), 0.57721566490153286, 1e-13);
}

TEST(Zeta, Examples) {
  EXPECT_NEAR(zeta_value({2, 0}).real(), kPi * kPi / 6, 1e-13);
  EXPECT_NEAR(zeta_value({0.5, 0}).real(), -1.4603545088095868, 1e-12);
  const double sigma = 1 + 1 / std::log(1e5);
  const cplx near_one = zeta_value({sigma, 0});
  EXPECT_NEAR(near_one.real(), 12.096429060700265, 1e-9);
  EXPECT_NEAR(near_one.imag(), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(zeta_value({0.5, 14.134725141734693})), 0.0, 1e-9);
}

TEST(LValue, Examples) {
  const auto four = enumerate_characters(4);
  EXPECT_NEAR(L_value({2, 0}, four[1]).real(), kCatalan, 1e-13);
  EXPECT_NEAR(L_value({2, 0}, enumerate_characters(1)[0]).real(), kPi * kPi / 6, 1e-13);
  const cplx central = L_value({0.5, 0}, quadratic_mod5());
  EXPECT_NEAR(central.imag(), 0.0, 1e-14);
  EXPECT_TRUE(std::isfinite(central.real()));
  EXPECT_THROW(L_value({-1.5, 0}, four[1]), DomainError);
  // L(1, chi_4) = pi / 4
  EXPECT_NEAR(L_value({1, 0}, four[1]).real(), kPi / 4, 1e-13);
}

TEST(LValue, ConjugationSymmetry) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> sigma(-0.5, 3.0);
  std::uniform_real_distribution<double> t(-30, 30);
  for (u64 q : {3, 5, 7, 12, 13, 16, 21}) {
    for (const auto& chi : enumerate_characters(q)) {
      const EvalPoint s{sigma(rng), t(rng)};
      const cplx lhs = L_value({s.sigma, -s.t}, chi.conjugate());
      EXPECT_LT(std::abs(lhs - std::conj(L_value(s, chi))), 1e-10);
    }
  }
}

TEST(LValue, AgreesWithDirichletSeries) {
  // Tail of sum_{n > N} |n^{-s}| is below N^{1 - sigma} / (sigma - 1).
  constexpr int terms = 200000;
  for (u64 q : {3, 4, 7, 10}) {
    for (const auto& chi : enumerate_characters(q)) {
      for (cplx s : {cplx(2, 0), cplx(2, 5), cplx(2.5, -12)}) {
        const double tail = std::pow(terms, 1 - s.real()) / (s.real() - 1);
        ASSERT_LT(tail, 1e-5);
        const cplx direct = direct_series(chi, s, terms);
        const double tol = s.real() >= 2.5 ? 1e-9 : std::max(1e-9, tail);
        EXPECT_LT(std::abs(L_value(EvalPoint::from(s), chi) - direct), tol) << q << " " << s;
      }
    }
  }
  for (u64 q : {3, 4, 7}) {
    for (const auto& chi : enumerate_characters(q)) {
      const cplx s(3.5, 4);
      EXPECT_LT(std::abs(L_value(EvalPoint::from(s), chi) - direct_series(chi, s, 100000)), 1e-9);
    }
  }
}

TEST(LValue, EvaluatorSharesTable) {
  const LEvaluator eval(12, {0.5, 3});
  for (const auto& chi : enumerate_characters(12))
    EXPECT_LT(std::abs(eval(chi) - L_value({0.5, 3}, chi)), 1e-14);
}

TEST(CompletedL, Examples) {
  const auto four = enumerate_characters(4);
  const double expected = std::pow(4 / kPi, 1.5) * std::sqrt(kPi) / 2 * kCatalan;
  const cplx value = completed_L({2, 0}, four[1]);
  EXPECT_NEAR(value.real(), expected, 1e-12);
  EXPECT_NEAR(value.real(), 1.1662436161232741, 1e-12);
  EXPECT_NEAR(completed_L({0.5, 0}, quadratic_mod5()).imag(), 0.0, 1e-14);
  EXPECT_THROW(completed_L({0.5, 0}, enumerate_characters(8)[0]), DomainError);
}

TEST(CompletedL, RootNumberHasUnitModulus) {
  for (u64 q = 3; q <= 60; ++q)
    for (const auto& chi : primitive_characters(q)) EXPECT_NEAR(std::abs(root_number(chi)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(root_number(quadratic_mod5()) - 1.0), 0.0, 1e-12);
}

TEST(CompletedL, FunctionalEquationExamples) {
  EXPECT_LT(functional_equation_residual({0.5, 0.7}, quadratic_mod5()), 1e-8);
  EXPECT_LT(functional_equation_residual({0.5, 0}, enumerate_characters(4)[1]), 1e-10);
  EXPECT_LT(functional_equation_residual({0.3, 2}, enumerate_characters(3)[1]), 1e-8);
}

TEST(CompletedL, FunctionalEquationGrid) {
  for (u64 q = 3; q <= 13; ++q)
    for (const auto& chi : primitive_characters(q))
      for (double t : {0.0, 0.5, 1.0, 2.7})
        EXPECT_LT(functional_equation_residual({0.5, t}, chi), 1e-8) << q << " " << chi.index() << " " << t;
}

TEST(LogAbsL, Examples) {
  const auto catalan = log_abs_L({2, 0}, enumerate_characters(4)[1]);
  ASSERT_TRUE(catalan.value.has_value());
  EXPECT_NEAR(*catalan.value, std::log(kCatalan), 1e-13);
  EXPECT_LT(*catalan.value, 0.0);
  EXPECT_NEAR(*log_abs_from_value(cplx(0.6, 0.8)).value, 0.0, 1e-15);
  const auto central = log_abs_L({0.5, 0}, quadratic_mod5());
  ASSERT_TRUE(central.value.has_value());
  EXPECT_TRUE(std::isfinite(*central.value));
  EXPECT_FALSE(central.near_zero);
  const auto zero = log_abs_from_value(cplx(1e-14, 0));
  EXPECT_TRUE(zero.near_zero);
  EXPECT_FALSE(zero.value.has_value());
}
