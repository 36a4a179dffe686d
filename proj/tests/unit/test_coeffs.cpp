#include <cmath>

#include <gtest/gtest.h>

#include "bje/coeffs.hpp"
#include "bje/error.hpp"
#include "oracles.hpp"

namespace bje {
namespace {

using testing::dec;
using testing::Rational;
using testing::to_double;

Rational exact_lambda(const Rational& a, const Rational& b, const Rational& c, int n) {
  const Rational m = n + c;
  return (m + a + 1) / (2 * m + a + b + 2) * (m + a + b + 1) / (2 * m + a + b + 1);
}

Rational exact_mu(const Rational& a, const Rational& b, const Rational& c, int n) {
  const Rational m = n + c;
  return m / (2 * m + a + b + 1) * (m + b) / (2 * m + a + b);
}

TEST(JacobiParams, DerivesGamma) {
  const JacobiParams p(0.3, -0.2, 2.0);
  EXPECT_DOUBLE_EQ(p.gamma(), 0.3 - 0.2 + 1.0);
  EXPECT_EQ(p.with_c(5.0).c(), 5.0);
  EXPECT_EQ(p.with_c(5.0).a(), 0.3);
}

TEST(JacobiParams, RejectsExponentsAtOrBelowMinusOne) {
  EXPECT_THROW(JacobiParams(-1.0, 0.0), DomainError);
  EXPECT_THROW(JacobiParams(0.0, -1.5), DomainError);
  EXPECT_THROW(JacobiParams(NAN, 0.0), DomainError);
  EXPECT_THROW(JacobiParams(0.0, 0.0, INFINITY), DomainError);
}

TEST(LambdaHat0, Examples) {
  EXPECT_DOUBLE_EQ(lambda_hat0(JacobiParams(0, 0, 0)), 0.5);
  EXPECT_DOUBLE_EQ(lambda_hat0(JacobiParams(1, 0, 0)), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(lambda_hat0(JacobiParams(0.5, 0.5, 1)), 0.5);
}

TEST(LambdaN, Examples) {
  EXPECT_DOUBLE_EQ(lambda_n(JacobiParams(0, 0, 0), 1), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(lambda_n(JacobiParams(0, 0, 0), 0), 0.5);
}

TEST(LambdaN, MatchesExactRational) {
  const double got = lambda_n(JacobiParams(0.3, -0.2, 2.0), 3);
  const double want = to_double(exact_lambda(dec(3, 1), dec(-2, 1), 2, 3));
  EXPECT_NEAR(got, want, 4e-16 * want);
}

TEST(MuN, Examples) {
  EXPECT_DOUBLE_EQ(mu_n(JacobiParams(0, 0, 0), 1), 1.0 / 6.0);
  EXPECT_EQ(mu_n(JacobiParams(0.7, -0.4, 0), 0), 0.0);
  EXPECT_DOUBLE_EQ(mu_n(JacobiParams(0.5, 0.5, 1), 1), 1.0 / 6.0);
}

TEST(MuN, ZeroAtOriginEvenWhenDenominatorVanishes) {
  // a + b = 0 makes 2n+2c+a+b vanish at n = c = 0.
  EXPECT_EQ(mu_n(JacobiParams(0.5, -0.5, 0), 0), 0.0);
}

TEST(TridiagEntries, SmallExamples) {
  const auto t = tridiag_entries(ModelKind::AssocIII, JacobiParams(0, 0, 0), 2);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_DOUBLE_EQ(t.diag(0), 0.5);
  EXPECT_DOUBLE_EQ(t.diag(1), 0.5);
  EXPECT_DOUBLE_EQ(t.offdiag(0), std::sqrt(1.0 / 12.0));

  const auto one = tridiag_entries(ModelKind::AssocI, JacobiParams(0, 0, 0), 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_DOUBLE_EQ(one.diag(0), 0.5);
}

TEST(TridiagEntries, ModelIIIMatchesExactRationalEntries) {
  const Rational a = dec(3, 1), b = dec(7, 1), c = 2;
  const auto t = tridiag_entries(ModelKind::AssocIII, JacobiParams(0.3, 0.7, 2.0), 6);
  const Rational lh0 = (c + a + 1) / (2 * c + a + b + 2);
  for (std::size_t i = 0; i < 6; ++i) {
    const int n = static_cast<int>(i);
    const Rational d = i == 0 ? lh0 : exact_lambda(a, b, c, n) + exact_mu(a, b, c, n);
    EXPECT_NEAR(t.diag(i), to_double(d), 1e-15) << "d" << i;
    if (i < 5) {
      const Rational first = i == 0 ? lh0 : exact_lambda(a, b, c, n);
      const Rational e2 = first * exact_mu(a, b, c, n + 1);
      EXPECT_NEAR(t.offdiag(i) * t.offdiag(i), to_double(e2), 1e-15) << "e" << i;
    }
  }
}

TEST(TridiagEntries, FirstEntriesPerModel) {
  const JacobiParams p(0.3, 0.7, 1.2);
  const double l0 = lambda_n(p, 0), m0 = mu_n(p, 0), m1 = mu_n(p, 1), lh = lambda_hat0(p);
  const auto i = tridiag_entries(ModelKind::AssocI, p, 3);
  const auto ii = tridiag_entries(ModelKind::AssocII, p, 3);
  const auto iii = tridiag_entries(ModelKind::AssocIII, p, 3);
  EXPECT_DOUBLE_EQ(i.diag(0), l0 + m0);
  EXPECT_DOUBLE_EQ(ii.diag(0), l0);
  EXPECT_DOUBLE_EQ(iii.diag(0), lh);
  EXPECT_DOUBLE_EQ(i.offdiag(0), std::sqrt(l0 * m1));
  EXPECT_DOUBLE_EQ(ii.offdiag(0), std::sqrt(l0 * m1));
  EXPECT_DOUBLE_EQ(iii.offdiag(0), std::sqrt(lh * m1));
  for (const auto* t : {&i, &ii, &iii}) {
    EXPECT_DOUBLE_EQ(t->diag(1), lambda_n(p, 1) + mu_n(p, 1));
    EXPECT_DOUBLE_EQ(t->offdiag(1), std::sqrt(lambda_n(p, 1) * mu_n(p, 2)));
  }
}

TEST(TridiagEntries, ModelIIIAtZeroShiftIsClassicalJacobiExactly) {
  for (double a : {-0.9, -0.5, 0.0, 0.3, 2.5}) {
    for (double b : {-0.7, 0.0, 1.1, 4.0}) {
      const JacobiParams p(a, b, 0.0);
      const auto x = tridiag_entries(ModelKind::AssocIII, p, 40);
      const auto y = tridiag_entries(ModelKind::ClassicalJacobi, p, 40);
      for (std::size_t i = 0; i < 40; ++i) EXPECT_EQ(x.diag(i), y.diag(i));
      for (std::size_t i = 0; i < 39; ++i) EXPECT_EQ(x.offdiag(i), y.offdiag(i));
    }
  }
}

TEST(TridiagEntries, IntegerShiftMovesTheIndex) {
  for (int c : {1, 2, 5}) {
    const JacobiParams shifted(0.4, 1.3, c), base(0.4, 1.3, 0.0);
    for (int n = 1; n < 30; ++n) {
      EXPECT_DOUBLE_EQ(lambda_n(shifted, n), lambda_n(base, n + c));
      EXPECT_DOUBLE_EQ(mu_n(shifted, n), mu_n(base, n + c));
    }
  }
}

TEST(TridiagEntries, BoundedAndApproachQuarter) {
  for (double a : {-0.5, 0.3, 2.0}) {
    for (double b : {-0.5, 0.7, 3.0}) {
      for (double c : {0.0, 0.5, 4.0}) {
        const JacobiParams p(a, b, c);
        const auto t = tridiag_entries(ModelKind::AssocIII, p, 400);
        for (std::size_t i = 0; i < t.size(); ++i) {
          EXPECT_GT(t.diag(i), 0.0);
          EXPECT_LT(t.diag(i), 2.0);
        }
        for (std::size_t i = 0; i + 1 < t.size(); ++i) {
          EXPECT_GT(t.offdiag(i), 0.0);
          EXPECT_LT(t.offdiag(i), 1.0);
        }
        // n * deviation stays bounded: fit C on n in [100, 200], check at 10^4.
        double fitted = 0.0;
        for (int n = 100; n <= 200; ++n) {
          fitted = std::max(fitted, n * (std::abs(lambda_n(p, n) - 0.25) + std::abs(mu_n(p, n) - 0.25)));
        }
        const int n = 10000;
        EXPECT_LE(std::abs(lambda_n(p, n) - 0.25) + std::abs(mu_n(p, n) - 0.25), 1.05 * fitted / n);
      }
    }
  }
}

TEST(ValidateModel, EnforcesEachModelsConstraints) {
  EXPECT_THROW(validate_model(ModelKind::ClassicalJacobi, JacobiParams(0, 0, 1)), DomainError);
  EXPECT_NO_THROW(validate_model(ModelKind::ClassicalJacobi, JacobiParams(0, 0, 0)));
  EXPECT_THROW(validate_model(ModelKind::AssocI, JacobiParams(-0.6, 0.0, 0.5)), DomainError);
  EXPECT_NO_THROW(validate_model(ModelKind::AssocI, JacobiParams(-0.4, 0.0, 0.5)));
  EXPECT_THROW(validate_model(ModelKind::AssocII, JacobiParams(0, 0, -0.5)), DomainError);
  EXPECT_NO_THROW(validate_model(ModelKind::AssocIII, JacobiParams(0.5, 0.5, -0.5)));
  EXPECT_THROW(validate_model(ModelKind::AssocIII, JacobiParams(-0.5, 0.5, -0.6)), DomainError);
  EXPECT_THROW(tridiag_entries(ModelKind::ClassicalJacobi, JacobiParams(0, 0, 1), 3), DomainError);
}

TEST(ModelKind, ParsesNames) {
  EXPECT_EQ(parse_model_kind("III"), ModelKind::AssocIII);
  EXPECT_EQ(parse_model_kind("associi"), ModelKind::AssocII);
  EXPECT_EQ(parse_model_kind("I"), ModelKind::AssocI);
  EXPECT_EQ(parse_model_kind("Jacobi"), ModelKind::ClassicalJacobi);
  EXPECT_THROW(parse_model_kind("IV"), DomainError);
  for (auto k : {ModelKind::ClassicalJacobi, ModelKind::AssocI, ModelKind::AssocII, ModelKind::AssocIII}) {
    EXPECT_EQ(parse_model_kind(to_string(k)), k);
  }
}

}  // namespace
}  // namespace bje
