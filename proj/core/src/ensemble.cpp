#include "bje/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bje/eigen.hpp"
#include "bje/error.hpp"
#include "bje/parallel.hpp"

namespace bje {
namespace {

constexpr double kClampTolerance = 1e-12;

}  // namespace

EnsembleConfig::EnsembleConfig(int n, double beta, double a, double b) : n_(n), beta_(beta), a_(a), b_(b) {
  if (n < 1) throw DomainError("EnsembleConfig: N must be >= 1");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("EnsembleConfig: beta must be positive");
  if (!(a > -1.0) || !(b > -1.0)) throw DomainError("EnsembleConfig: require a > -1 and b > -1");
}

EnsembleConfig EnsembleConfig::from_c(int n, double c, double a, double b) {
  if (n < 1) throw DomainError("EnsembleConfig: N must be >= 1");
  return {n, 2.0 * c / n, a, b};
}

RegimeParams::RegimeParams(double a_scale, double b_scale) : A(a_scale), B(b_scale) {
  if (!(A > 0.0) || !(B > 0.0)) throw DomainError("RegimeParams: require A > 0 and B > 0");
}

BetaShape p_shape(const EnsembleConfig& cfg, int n) {
  if (n < 1 || n > cfg.n()) throw DomainError("p_shape: index out of range");
  const double base = (cfg.n() - n) * cfg.kappa();
  return {base + cfg.a() + 1.0, base + cfg.b() + 1.0};
}

BetaShape q_shape(const EnsembleConfig& cfg, int n) {
  if (n < 1 || n >= cfg.n()) throw DomainError("q_shape: index out of range");
  return {(cfg.n() - n) * cfg.kappa(), (cfg.n() - n - 1) * cfg.kappa() + cfg.a() + cfg.b() + 2.0};
}

BetaDraws sample_pq(const EnsembleConfig& cfg, Rng& rng) {
  BetaDraws d;
  const int n = cfg.n();
  d.p.resize(static_cast<std::size_t>(n));
  d.q.resize(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n; ++i) {
    const auto ps = p_shape(cfg, i);
    d.p[static_cast<std::size_t>(i - 1)] = sample_beta(ps.alpha, ps.beta, rng);
    if (i < n) {
      const auto qs = q_shape(cfg, i);
      d.q[static_cast<std::size_t>(i - 1)] = sample_beta(qs.alpha, qs.beta, rng);
    }
  }
  return d;
}

BidiagonalFactor factor_from(const BetaDraws& draws) {
  const std::size_t n = draws.p.size();
  if (draws.q.size() + 1 != n) throw DomainError("factor_from: need N p-draws and N-1 q-draws");
  BidiagonalFactor f;
  f.s.resize(n);
  f.t.resize(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double q_prev = i == 0 ? 0.0 : draws.q[i - 1];
    f.s[i] = std::sqrt(draws.p[i] * (1.0 - q_prev));
    if (i + 1 < n) f.t[i] = std::sqrt(draws.q[i] * (1.0 - draws.p[i]));
  }
  return f;
}

BidiagonalFactor sample_model(const EnsembleConfig& cfg, Rng& rng) { return factor_from(sample_pq(cfg, rng)); }

SymmetricTridiagonal to_tridiagonal(const BidiagonalFactor& f) {
  const std::size_t n = f.s.size();
  if (n == 0 || f.t.size() + 1 != n) throw DomainError("to_tridiagonal: malformed factor");
  std::vector<double> d(n), e(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double t_prev = i == 0 ? 0.0 : f.t[i - 1];
    d[i] = f.s[i] * f.s[i] + t_prev * t_prev;
    if (i + 1 < n) e[i] = f.s[i] * f.t[i];
  }
  return {std::move(d), std::move(e)};
}

namespace {

std::vector<double> clamped_eigenvalues(const SymmetricTridiagonal& t) {
  auto values = eigen_tridiagonal(t, false).values;
  for (double& v : values) {
    if (v < 0.0) {
      if (v < -kClampTolerance) throw DomainError("empirical_measure: eigenvalue below 0: " + std::to_string(v));
      v = 0.0;
    } else if (v > 1.0) {
      if (v > 1.0 + kClampTolerance) throw DomainError("empirical_measure: eigenvalue above 1: " + std::to_string(v));
      v = 1.0;
    }
  }
  return values;
}

}  // namespace

DiscreteMeasure empirical_measure(const EnsembleConfig& cfg, Rng& rng) {
  DiscreteMeasure m;
  m.nodes = clamped_eigenvalues(to_tridiagonal(sample_model(cfg, rng)));
  m.weights.assign(m.nodes.size(), 1.0 / static_cast<double>(m.nodes.size()));
  return m;
}

MonteCarloMoments mc_moments(const EnsembleConfig& cfg, int max_k, std::size_t trials,
                             const MonteCarloOptions& options) {
  if (max_k < 0) throw DomainError("mc_moments: order must be nonnegative");
  if (trials < 2) throw DomainError("mc_moments: need at least two trials");
  const std::size_t width = static_cast<std::size_t>(max_k) + 1;
  std::vector<double> per_trial(trials * width, 0.0);
  std::vector<unsigned char> failed(trials, 0);

  parallel_for(trials, options.threads, [&](std::size_t i) {
    Rng rng(options.seed, i);
    double* row = &per_trial[i * width];
    try {
      const auto measure = empirical_measure(cfg, rng);
      for (std::size_t j = 0; j < measure.size(); ++j) {
        double power = measure.weights[j];
        for (std::size_t k = 0; k < width; ++k) {
          row[k] += power;
          power *= measure.nodes[j];
        }
      }
    } catch (const Error&) {
      failed[i] = 1;
    }
  });

  MonteCarloMoments out;
  out.trials = trials;
  for (auto f : failed) out.failures += f;
  if (static_cast<double>(out.failures) > options.max_failure_rate * static_cast<double>(trials)) {
    throw ConvergenceError("mc_moments: " + std::to_string(out.failures) + " of " + std::to_string(trials) +
                           " trials failed");
  }
  const std::size_t good = trials - out.failures;
  if (good < 2) throw ConvergenceError("mc_moments: fewer than two successful trials");

  // Welford accumulation in trial order.
  std::vector<double> mean(width, 0.0), m2(width, 0.0);
  std::size_t count = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    if (failed[i]) continue;
    ++count;
    for (std::size_t k = 0; k < width; ++k) {
      const double x = per_trial[i * width + k];
      const double delta = x - mean[k];
      mean[k] += delta / static_cast<double>(count);
      m2[k] += delta * (x - mean[k]);
    }
  }
  std::vector<double> se(width);
  for (std::size_t k = 0; k < width; ++k) {
    se[k] = std::sqrt(m2[k] / static_cast<double>(count - 1) / static_cast<double>(count));
  }
  out.mean = MomentVector(std::move(mean));
  out.standard_error = MomentVector(std::move(se));
  return out;
}

std::vector<double> sample_eigenvalues(const EnsembleConfig& cfg, std::size_t trials,
                                       const MonteCarloOptions& options) {
  const std::size_t n = static_cast<std::size_t>(cfg.n());
  std::vector<double> out(trials * n);
  parallel_for(trials, options.threads, [&](std::size_t i) {
    Rng rng(options.seed, i);
    const auto measure = empirical_measure(cfg, rng);
    std::copy(measure.nodes.begin(), measure.nodes.end(), out.begin() + static_cast<std::ptrdiff_t>(i * n));
  });
  return out;
}

namespace {

double checked_quotient(double num, double den) {
  if (den == 0.0) throw DomainError("limit_tridiagonal: degenerate denominator");
  return num / den;
}

// Limits of s_n^2 and t_n^2 (1-based n).
double limit_s2(double N, double A, double B, int n) {
  if (n == 1) return checked_quotient(1 - N - A, 2 - 2 * N - A - B);
  return checked_quotient(n - N - A, 2 * n - 2 * N - A - B) *
         checked_quotient(n - N - A - B, 2 * n - 2 * N - A - B - 1);
}

double limit_t2(double N, double A, double B, int n) {
  return checked_quotient(n - N, 2 * n - 2 * N - A - B + 1) * checked_quotient(n - N - B, 2 * n - 2 * N - A - B);
}

SymmetricTridiagonal assemble(const std::vector<double>& s2, const std::vector<double>& t2) {
  const std::size_t n = s2.size();
  std::vector<double> d(n), e(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = s2[i] + (i == 0 ? 0.0 : t2[i - 1]);
    if (i + 1 < n) {
      const double radicand = s2[i] * t2[i];
      if (radicand < 0.0) throw DomainError("limit_tridiagonal: negative off-diagonal radicand");
      e[i] = std::sqrt(radicand);
    }
  }
  return {std::move(d), std::move(e)};
}

}  // namespace

double limit_p(double N, double A, double B, int n) { return checked_quotient(n - N - A, 2 * n - 2 * N - A - B); }

double limit_q(double N, double A, double B, int n) { return checked_quotient(n - N, 2 * n - 2 * N - A - B + 1); }

SymmetricTridiagonal limit_tridiagonal(double n_size, double A, double B, int size) {
  if (size < 1) throw DomainError("limit_tridiagonal: size must be >= 1");
  std::vector<double> s2(static_cast<std::size_t>(size)), t2(static_cast<std::size_t>(size - 1));
  for (int n = 1; n <= size; ++n) {
    s2[static_cast<std::size_t>(n - 1)] = limit_s2(n_size, A, B, n);
    if (n < size) t2[static_cast<std::size_t>(n - 1)] = limit_t2(n_size, A, B, n);
  }
  return assemble(s2, t2);
}

SymmetricTridiagonal limit_tridiagonal(int n, const RegimeParams& r) { return limit_tridiagonal(n, r.A, r.B, n); }

SymmetricTridiagonal regime_mean_tridiagonal(int n, double kappa, const RegimeParams& r) {
  const EnsembleConfig cfg(n, 2.0 * kappa, r.A * kappa, r.B * kappa);
  std::vector<double> s2(static_cast<std::size_t>(n)), t2(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n; ++i) {
    const double ep = p_shape(cfg, i).mean();
    const double eq_prev = i == 1 ? 0.0 : q_shape(cfg, i - 1).mean();
    s2[static_cast<std::size_t>(i - 1)] = ep * (1.0 - eq_prev);
    if (i < n) t2[static_cast<std::size_t>(i - 1)] = q_shape(cfg, i).mean() * (1.0 - ep);
  }
  return assemble(s2, t2);
}

}  // namespace bje
