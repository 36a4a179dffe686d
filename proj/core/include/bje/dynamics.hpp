#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bje/coeffs.hpp"
#include "bje/random.hpp"
#include "bje/spectral.hpp"

namespace bje {

/// Weight exponents and inverse temperature of the particle system. beta = 0
/// gives independent Jacobi diffusions.
struct DynamicsParams {
  DynamicsParams(double a, double b, double beta);

  /// beta = 2c / N; c = 0 maps to beta = 0.
  static DynamicsParams from_c(int n, double c, double a, double b);

  double a;
  double b;
  double beta;
};

/// Particles in the chamber 0 <= lambda_1 <= ... <= lambda_N <= 1.
struct ParticleState {
  double time = 0.0;
  std::vector<double> lambda;
};

/// Recorded moments m_0..m_K on an increasing time grid.
struct MomentPath {
  std::vector<double> times;
  std::vector<MomentVector> moments;
};

/// Magnitude floor for lambda_i - lambda_j in the interaction term.
inline constexpr double kCollisionFloor = 1e-12;
/// Largest Euler-Maruyama step accepted by em_step.
inline constexpr double kMaxStep = 1e-2;

struct DriftDiffusion {
  std::vector<double> drift;
  std::vector<double> diffusion;  ///< sqrt(2 lambda (1 - lambda))
};

/// a + 1 - (a+b+2) lambda_i + (beta/2) sum_{j != i} 2 lambda_i (1 - lambda_i) / (lambda_i - lambda_j).
DriftDiffusion drift(const ParticleState& state, const DynamicsParams& p);

/// One Euler-Maruyama step, clamped to [0, 1] and re-sorted.
ParticleState em_step(const ParticleState& state, double dt, const DynamicsParams& p, Rng& rng);

/// (1/N) sum lambda_i^k for k = 0..K.
MomentVector empirical_moments(std::span<const double> lambda, int max_k);

struct SimulationOptions {
  std::uint64_t seed = 0;
  unsigned threads = 0;
  int records = 10;  ///< number of recording intervals on [0, T]
};

struct SimulatedMoments {
  MomentPath mean;
  MomentPath standard_error;
  std::size_t paths = 0;
  std::size_t failures = 0;  ///< paths aborted on a non-finite state
};

/// Path i uses Rng(seed, i); averages run in path order.
SimulatedMoments simulate_moments(const DynamicsParams& p, const ParticleState& init, double t_end, double dt,
                                  std::size_t paths, int max_k, const SimulationOptions& options = {});

/// Right-hand side of the limiting moment hierarchy; entry 0 is 0, entry k is
/// m_k' for k = 1..K. Requires m[0] == 1.
std::vector<double> ode_rhs(const MomentVector& m, const JacobiParams& p);

struct OdeSolution {
  MomentPath path;
  /// max |y(dt) - y(dt/2)| over the recorded grid, divided by t_end.
  double error_per_unit_time = 0.0;
};

/// Classical RK4 with a step-halving error estimate. Throws ConvergenceError
/// if any |m_k| exceeds 10.
OdeSolution integrate_moments(const MomentVector& m0, const JacobiParams& p, double t_end, double dt,
                              int records = 10);

/// Fixed point u_0..u_K of the hierarchy.
MomentVector stationary_uk(const JacobiParams& p, int max_k);

/// Finite-N drift of S_k = <mu^(N), x^k> written through S_0..S_k, including
/// the -(c/N)(k^2 S_{k-1} - k(k+1) S_k) correction; c = beta N / 2.
std::vector<double> moment_drift_finite(const MomentVector& s, const DynamicsParams& p, int n);

/// The same drift evaluated particle by particle from the Ito formula.
std::vector<double> moment_drift_particles(const ParticleState& state, const DynamicsParams& p, int max_k);

}  // namespace bje
