#include <cmath>

#include <gtest/gtest.h>

#include "bje/coeffs.hpp"
#include "bje/eigen.hpp"
#include "bje/ensemble.hpp"
#include "bje/error.hpp"
#include "oracles.hpp"

namespace bje {
namespace {

TEST(EnsembleConfig, Validation) {
  const EnsembleConfig cfg(10, 0.4, 0.5, -0.5);
  EXPECT_EQ(cfg.kappa(), 0.2);
  EXPECT_THROW(EnsembleConfig(0, 1.0, 0, 0), DomainError);
  EXPECT_THROW(EnsembleConfig(3, 0.0, 0, 0), DomainError);
  EXPECT_THROW(EnsembleConfig(3, 1.0, -1.0, 0), DomainError);
  EXPECT_DOUBLE_EQ(EnsembleConfig::from_c(60, 1.0, 0.5, 0.5).beta(), 1.0 / 30.0);
  EXPECT_THROW(RegimeParams(0.0, 1.0), DomainError);
}

TEST(Shapes, MatchTheModel) {
  const EnsembleConfig cfg(5, 1.0, 0.3, 0.7);  // kappa = 0.5
  const auto p2 = p_shape(cfg, 2);
  EXPECT_DOUBLE_EQ(p2.alpha, 3 * 0.5 + 1.3);
  EXPECT_DOUBLE_EQ(p2.beta, 3 * 0.5 + 1.7);
  const auto q2 = q_shape(cfg, 2);
  EXPECT_DOUBLE_EQ(q2.alpha, 1.5);
  EXPECT_DOUBLE_EQ(q2.beta, 1.0 + 3.0);
  EXPECT_THROW(q_shape(cfg, 5), DomainError);
  EXPECT_THROW(p_shape(cfg, 0), DomainError);
}

TEST(SampleModel, SingleSiteIsBetaDraw) {
  const EnsembleConfig cfg(1, 2.0, 0.0, 0.0);
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    Rng rng(1, static_cast<std::uint64_t>(i));
    const auto f = sample_model(cfg, rng);
    ASSERT_EQ(f.s.size(), 1u);
    ASSERT_TRUE(f.t.empty());
    sum += f.s[0] * f.s[0];
  }
  EXPECT_NEAR(sum / n, 0.5, 3 * std::sqrt(1.0 / 12 / n));
}

TEST(SampleModel, Reproducible) {
  const EnsembleConfig cfg(3, 0.7, 0.2, 0.4);
  Rng a(5), b(5);
  const auto f = sample_model(cfg, a), g = sample_model(cfg, b);
  EXPECT_EQ(f.s, g.s);
  EXPECT_EQ(f.t, g.t);
}

TEST(ToTridiagonal, Examples) {
  const auto one = to_tridiagonal({{0.6}, {}});
  EXPECT_DOUBLE_EQ(one.diag(0), 0.36);
  const auto two = to_tridiagonal({{0.6, 0.5}, {0.8}});
  EXPECT_DOUBLE_EQ(two.diag(0), 0.36);
  EXPECT_DOUBLE_EQ(two.diag(1), 0.89);
  EXPECT_DOUBLE_EQ(two.offdiag(0), 0.48);
  EXPECT_THROW(to_tridiagonal({{0.6, 0.5}, {}}), DomainError);
}

TEST(ToTridiagonal, MatchesDenseProduct) {
  for (int n = 1; n <= 8; ++n) {
    Rng rng(11, static_cast<std::uint64_t>(n));
    const auto f = sample_model(EnsembleConfig(n, 1.3, -0.3, 0.6), rng);
    testing::Dense bmat(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < f.s.size(); ++i) {
      bmat(i, i) = f.s[i];
      if (i + 1 < f.s.size()) bmat(i + 1, i) = f.t[i];
    }
    const auto dense = testing::multiply_transpose(bmat);
    const auto t = to_tridiagonal(f);
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        const double want = i == j ? t.diag(i) : (i + 1 == j ? t.offdiag(i) : (j + 1 == i ? t.offdiag(j) : 0.0));
        EXPECT_NEAR(dense(i, j), want, 1e-15);
      }
    }
  }
}

TEST(FactorFrom, Identities) {
  const BetaDraws d{{0.3, 0.6, 0.9}, {0.2, 0.5}};
  const auto f = factor_from(d);
  EXPECT_DOUBLE_EQ(f.s[0] * f.s[0], 0.3);
  EXPECT_DOUBLE_EQ(f.s[1] * f.s[1], 0.6 * 0.8);
  EXPECT_DOUBLE_EQ(f.t[1] * f.t[1], 0.5 * 0.4);
}

TEST(EmpiricalMeasure, SupportAndWeights) {
  for (const auto& cfg : {EnsembleConfig(40, 1e-3, -0.9, -0.9), EnsembleConfig(40, 50.0, 3.0, 0.1),
                          EnsembleConfig(7, 2.0, 0.0, 0.0)}) {
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
      Rng rng(12, trial);
      const auto t = to_tridiagonal(sample_model(cfg, rng));
      for (double v : eigen_tridiagonal(t, false).values) {
        EXPECT_GE(v, -1e-10);
        EXPECT_LE(v, 1.0 + 1e-10);
      }
      Rng again(12, trial);
      const auto m = empirical_measure(cfg, again);
      ASSERT_EQ(m.size(), static_cast<std::size_t>(cfg.n()));
      for (std::size_t i = 0; i < m.size(); ++i) {
        EXPECT_GE(m.nodes[i], 0.0);
        EXPECT_LE(m.nodes[i], 1.0);
        EXPECT_DOUBLE_EQ(m.weights[i], 1.0 / cfg.n());
      }
    }
  }
}

TEST(McMoments, SingleSiteMean) {
  const auto mc = mc_moments(EnsembleConfig(1, 1.0, 0.0, 0.0), 2, 20000);
  EXPECT_EQ(mc.mean[0], 1.0);
  EXPECT_NEAR(mc.mean[1], 0.5, 3 * mc.standard_error[1]);
  EXPECT_NEAR(mc.standard_error[1], std::sqrt(1.0 / 12 / 20000), 2e-4);
  EXPECT_EQ(mc.failures, 0u);
}

TEST(McMoments, IndependentOfThreadCount) {
  const EnsembleConfig cfg(12, 0.5, 0.5, 0.5);
  MonteCarloOptions one, four;
  one.seed = four.seed = 99;
  one.threads = 1;
  four.threads = 4;
  const auto a = mc_moments(cfg, 4, 500, one), b = mc_moments(cfg, 4, 500, four);
  EXPECT_EQ(a.mean.values(), b.mean.values());
  EXPECT_EQ(a.standard_error.values(), b.standard_error.values());
  EXPECT_THROW(mc_moments(cfg, 4, 1), DomainError);
}

TEST(SampleEigenvalues, CountAndDeterminism) {
  const auto cfg = EnsembleConfig::from_c(60, 1.0, 0.5, 0.5);
  MonteCarloOptions opt;
  opt.seed = 7;
  const auto x = sample_eigenvalues(cfg, 100, opt);
  EXPECT_EQ(x.size(), 6000u);
  opt.threads = 3;
  EXPECT_EQ(sample_eigenvalues(cfg, 100, opt), x);
}

TEST(LimitTridiagonal, SingleSite) {
  const auto t = limit_tridiagonal(1, RegimeParams(1.5, 2.5));
  ASSERT_EQ(t.size(), 1u);
  EXPECT_DOUBLE_EQ(t.diag(0), 1.5 / 4.0);
}

TEST(LimitTridiagonal, DualitySubstitutionGivesModelIII) {
  for (const JacobiParams& p : {JacobiParams(0.3, 0.7, 1.2), JacobiParams(0.0, 0.0, 0.0), JacobiParams(2.0, -0.5, 4.5)}) {
    const auto lim = limit_tridiagonal(-p.c(), -p.a(), -p.b(), 15);
    const auto j3 = tridiag_entries(ModelKind::AssocIII, p, 15);
    for (std::size_t i = 0; i < 15; ++i) EXPECT_NEAR(lim.diag(i), j3.diag(i), 1e-12);
    for (std::size_t i = 0; i < 14; ++i) EXPECT_NEAR(lim.offdiag(i), j3.offdiag(i), 1e-12);
  }
}

TEST(Regime, MeansApproachLimitsAtRateOneOverKappa) {
  const RegimeParams r(1.5, 2.5);
  const int n = 5;
  const auto lim = limit_tridiagonal(n, r);
  auto gap = [&](double kappa) {
    const auto m = regime_mean_tridiagonal(n, kappa, r);
    double g = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) g = std::max(g, std::abs(m.diag(i) - lim.diag(i)));
    return g;
  };
  EXPECT_LT(gap(1e6), 1e-4);
  for (double kappa : {1e2, 1e3, 1e4}) EXPECT_NEAR(gap(kappa) / gap(2 * kappa), 2.0, 0.05) << kappa;
  const EnsembleConfig cfg(n, 2e6, 1.5e6, 2.5e6);
  for (int i = 1; i <= n; ++i) EXPECT_NEAR(p_shape(cfg, i).mean(), limit_p(n, 1.5, 2.5, i), 1e-4);
}

}  // namespace
}  // namespace bje
