#include "bje/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bje/error.hpp"
#include "bje/parallel.hpp"

namespace bje {

DynamicsParams::DynamicsParams(double a_, double b_, double beta_) : a(a_), b(b_), beta(beta_) {
  if (!(a > -1.0) || !(b > -1.0)) throw DomainError("DynamicsParams: require a > -1 and b > -1");
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw DomainError("DynamicsParams: beta must be nonnegative");
}

DynamicsParams DynamicsParams::from_c(int n, double c, double a, double b) {
  if (n < 1) throw DomainError("DynamicsParams: N must be >= 1");
  if (!(c >= 0.0)) throw DomainError("DynamicsParams: c must be nonnegative");
  return {a, b, 2.0 * c / n};
}

namespace {

// Sum over j != i of 1 / (lambda_i - lambda_j), gaps floored with the sign
// implied by index order when they tie.
std::vector<double> inverse_gap_sums(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<double> sums(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double gap = x[j] - x[i];
      if (std::abs(gap) < kCollisionFloor) gap = kCollisionFloor;
      const double inv = 1.0 / gap;
      sums[j] += inv;
      sums[i] -= inv;
    }
  }
  return sums;
}

}  // namespace

DriftDiffusion drift(const ParticleState& state, const DynamicsParams& p) {
  const auto& x = state.lambda;
  DriftDiffusion out;
  out.drift.resize(x.size());
  out.diffusion.resize(x.size());
  const auto gaps = p.beta == 0.0 ? std::vector<double>(x.size(), 0.0) : inverse_gap_sums(x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double v = x[i] * (1.0 - x[i]);
    out.drift[i] = p.a + 1.0 - (p.a + p.b + 2.0) * x[i] + p.beta * v * gaps[i];
    out.diffusion[i] = std::sqrt(std::max(0.0, 2.0 * v));
  }
  return out;
}

ParticleState em_step(const ParticleState& state, double dt, const DynamicsParams& p, Rng& rng) {
  if (!(dt >= 0.0) || dt > kMaxStep) throw DomainError("em_step: dt must lie in [0, " + std::to_string(kMaxStep) + "]");
  ParticleState next = state;
  next.time += dt;
  if (dt == 0.0) return next;
  const auto dd = drift(state, p);
  const double root = std::sqrt(dt);
  for (std::size_t i = 0; i < next.lambda.size(); ++i) {
    const double moved = state.lambda[i] + dd.drift[i] * dt + dd.diffusion[i] * root * rng.normal();
    next.lambda[i] = std::clamp(moved, 0.0, 1.0);
    if (std::isnan(moved)) next.lambda[i] = moved;
  }
  std::sort(next.lambda.begin(), next.lambda.end());
  return next;
}

MomentVector empirical_moments(std::span<const double> lambda, int max_k) {
  if (max_k < 0) throw DomainError("empirical_moments: order must be nonnegative");
  if (lambda.empty()) throw DomainError("empirical_moments: no particles");
  std::vector<double> m(static_cast<std::size_t>(max_k) + 1, 0.0);
  const double w = 1.0 / static_cast<double>(lambda.size());
  for (double x : lambda) {
    double power = w;
    for (auto& mk : m) {
      mk += power;
      power *= x;
    }
  }
  m[0] = 1.0;
  return MomentVector(std::move(m));
}

SimulatedMoments simulate_moments(const DynamicsParams& p, const ParticleState& init, double t_end, double dt,
                                  std::size_t paths, int max_k, const SimulationOptions& options) {
  if (paths < 2) throw DomainError("simulate_moments: need at least two paths");
  if (init.lambda.empty()) throw DomainError("simulate_moments: empty initial state");
  if (!(t_end > 0.0) || !(dt > 0.0) || dt > kMaxStep) throw DomainError("simulate_moments: invalid time grid");
  if (options.records < 1) throw DomainError("simulate_moments: records must be >= 1");
  const int records = options.records;
  const long steps_total = std::max(1L, std::lround(t_end / dt));
  const long per_record = std::max(1L, (steps_total + records - 1) / records);
  const double step = t_end / static_cast<double>(per_record * records);

  const std::size_t width = static_cast<std::size_t>(max_k) + 1;
  const std::size_t slots = static_cast<std::size_t>(records) + 1;
  std::vector<double> samples(paths * slots * width, 0.0);
  std::vector<unsigned char> failed(paths, 0);

  parallel_for(paths, options.threads, [&](std::size_t path) {
    Rng rng(options.seed, path);
    ParticleState state = init;
    std::sort(state.lambda.begin(), state.lambda.end());
    double* out = &samples[path * slots * width];
    auto record = [&](std::size_t slot) {
      const auto m = empirical_moments(state.lambda, max_k);
      std::copy(m.values().begin(), m.values().end(), out + slot * width);
    };
    record(0);
    for (int r = 1; r <= records; ++r) {
      for (long s = 0; s < per_record; ++s) state = em_step(state, step, p, rng);
      for (double x : state.lambda) {
        if (!std::isfinite(x)) {
          failed[path] = 1;
          return;
        }
      }
      record(static_cast<std::size_t>(r));
    }
  });

  SimulatedMoments result;
  result.paths = paths;
  for (auto f : failed) result.failures += f;
  const std::size_t good = paths - result.failures;
  if (good < 2) throw ConvergenceError("simulate_moments: fewer than two finite paths");
  for (std::size_t slot = 0; slot < slots; ++slot) {
    std::vector<double> mean(width, 0.0), m2(width, 0.0);
    std::size_t count = 0;
    for (std::size_t path = 0; path < paths; ++path) {
      if (failed[path]) continue;
      ++count;
      const double* row = &samples[(path * slots + slot) * width];
      for (std::size_t k = 0; k < width; ++k) {
        const double delta = row[k] - mean[k];
        mean[k] += delta / static_cast<double>(count);
        m2[k] += delta * (row[k] - mean[k]);
      }
    }
    std::vector<double> se(width);
    for (std::size_t k = 0; k < width; ++k) se[k] = std::sqrt(m2[k] / static_cast<double>((count - 1) * count));
    const double t = init.time + static_cast<double>(slot) * static_cast<double>(per_record) * step;
    result.mean.times.push_back(t);
    result.standard_error.times.push_back(t);
    result.mean.moments.emplace_back(std::move(mean));
    result.standard_error.moments.emplace_back(std::move(se));
  }
  return result;
}

std::vector<double> ode_rhs(const MomentVector& m, const JacobiParams& p) {
  if (m.size() == 0 || m[0] != 1.0) throw DomainError("ode_rhs: require m[0] == 1");
  const double a = p.a(), b = p.b(), c = p.c();
  const int kmax = m.order();
  std::vector<double> d(m.size(), 0.0);
  for (int k = 1; k <= kmax; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    double conv_lo = 0.0;
    for (int i = 0; i < k; ++i) conv_lo += m[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(k - 1 - i)];
    double conv_hi = 0.0;
    for (int j = 1; j < k; ++j) conv_hi += m[static_cast<std::size_t>(j)] * m[static_cast<std::size_t>(k - j)];
    d[uk] = -k * (2 * c + a + b + k + 1) * m[uk] + k * (a + k) * m[uk - 1] + c * k * (conv_lo - conv_hi);
  }
  return d;
}

namespace {

void rk4_step(std::vector<double>& y, double h, const JacobiParams& p) {
  const std::size_t n = y.size();
  auto f = [&](const std::vector<double>& v) { return ode_rhs(MomentVector(v), p); };
  std::vector<double> tmp(n);
  const auto k1 = f(y);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
  const auto k2 = f(tmp);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
  const auto k3 = f(tmp);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
  const auto k4 = f(tmp);
  for (std::size_t i = 0; i < n; ++i) y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

void check_bounded(const std::vector<double>& y, double t) {
  for (double v : y) {
    if (!(std::abs(v) <= 10.0)) throw ConvergenceError("integrate_moments: blow-up at t = " + std::to_string(t));
  }
}

}  // namespace

OdeSolution integrate_moments(const MomentVector& m0, const JacobiParams& p, double t_end, double dt, int records) {
  if (m0.size() == 0 || m0[0] != 1.0) throw DomainError("integrate_moments: require m[0] == 1");
  if (!(t_end > 0.0) || !(dt > 0.0)) throw DomainError("integrate_moments: invalid time grid");
  if (records < 1) throw DomainError("integrate_moments: records must be >= 1");
  const long steps_total = std::max(1L, std::lround(t_end / dt));
  const long per_record = std::max(1L, (steps_total + records - 1) / records);
  const double h = t_end / static_cast<double>(per_record * records);

  std::vector<double> coarse = m0.values(), fine = m0.values();
  OdeSolution sol;
  double worst = 0.0;
  sol.path.times.push_back(0.0);
  sol.path.moments.push_back(m0);
  for (int r = 1; r <= records; ++r) {
    for (long s = 0; s < per_record; ++s) {
      rk4_step(coarse, h, p);
      rk4_step(fine, 0.5 * h, p);
      rk4_step(fine, 0.5 * h, p);
    }
    const double t = static_cast<double>(r) * static_cast<double>(per_record) * h;
    check_bounded(fine, t);
    for (std::size_t k = 0; k < fine.size(); ++k) worst = std::max(worst, std::abs(fine[k] - coarse[k]));
    sol.path.times.push_back(t);
    sol.path.moments.emplace_back(fine);
  }
  sol.error_per_unit_time = worst / t_end;
  return sol;
}

MomentVector stationary_uk(const JacobiParams& p, int max_k) {
  if (max_k < 0) throw DomainError("stationary_uk: order must be nonnegative");
  const double a = p.a(), b = p.b(), c = p.c();
  std::vector<double> u(static_cast<std::size_t>(max_k) + 1, 0.0);
  u[0] = 1.0;
  for (int k = 1; k <= max_k; ++k) {
    double conv_lo = 0.0;
    for (int i = 0; i < k; ++i) conv_lo += u[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(k - 1 - i)];
    double conv_hi = 0.0;
    for (int j = 1; j < k; ++j) conv_hi += u[static_cast<std::size_t>(j)] * u[static_cast<std::size_t>(k - j)];
    const double den = 2 * c + a + b + k + 1;
    if (den == 0.0) throw DomainError("stationary_uk: vanishing denominator");
    u[static_cast<std::size_t>(k)] = ((a + k) * u[static_cast<std::size_t>(k - 1)] + c * (conv_lo - conv_hi)) / den;
  }
  return MomentVector(std::move(u));
}

std::vector<double> moment_drift_finite(const MomentVector& s, const DynamicsParams& p, int n) {
  if (n < 1) throw DomainError("moment_drift_finite: N must be >= 1");
  const double c = p.beta * n / 2.0;
  const JacobiParams jp(p.a, p.b, c);
  auto d = ode_rhs(s, jp);
  for (int k = 1; k <= s.order(); ++k) {
    const auto uk = static_cast<std::size_t>(k);
    d[uk] -= c / n * (static_cast<double>(k) * k * s[uk - 1] - static_cast<double>(k) * (k + 1) * s[uk]);
  }
  return d;
}

std::vector<double> moment_drift_particles(const ParticleState& state, const DynamicsParams& p, int max_k) {
  if (max_k < 0) throw DomainError("moment_drift_particles: order must be nonnegative");
  const auto dd = drift(state, p);
  const double w = 1.0 / static_cast<double>(state.lambda.size());
  std::vector<double> out(static_cast<std::size_t>(max_k) + 1, 0.0);
  for (std::size_t i = 0; i < state.lambda.size(); ++i) {
    const double x = state.lambda[i];
    for (int k = 1; k <= max_k; ++k) {
      const double first = k * std::pow(x, k - 1);
      const double second = k > 1 ? static_cast<double>(k) * (k - 1) * std::pow(x, k - 2) : 0.0;
      out[static_cast<std::size_t>(k)] += w * (first * dd.drift[i] + x * (1.0 - x) * second);
    }
  }
  return out;
}

}  // namespace bje
