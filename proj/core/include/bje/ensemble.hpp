#pragma once

#include <cstdint>
#include <vector>

#include "bje/random.hpp"
#include "bje/spectral.hpp"
#include "bje/tridiagonal.hpp"

namespace bje {

/// System size N, inverse temperature beta > 0 and weight exponents a, b > -1.
class EnsembleConfig {
 public:
  EnsembleConfig(int n, double beta, double a, double b);

  /// beta = 2c / N, the high-temperature regime with beta N = 2c.
  static EnsembleConfig from_c(int n, double c, double a, double b);

  int n() const noexcept { return n_; }
  double beta() const noexcept { return beta_; }
  double kappa() const noexcept { return beta_ / 2.0; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

 private:
  int n_;
  double beta_;
  double a_;
  double b_;
};

/// Scaled weight exponents a = A kappa, b = B kappa for the kappa -> inf regime.
struct RegimeParams {
  RegimeParams(double a_scale, double b_scale);
  double A;
  double B;
};

/// Independent draws p_1..p_N, q_1..q_{N-1}.
struct BetaDraws {
  std::vector<double> p;
  std::vector<double> q;
};

/// Lower-bidiagonal factor: s on the diagonal, t below it.
struct BidiagonalFactor {
  std::vector<double> s;  ///< s_n = sqrt(p_n (1 - q_{n-1})), q_0 = 0
  std::vector<double> t;  ///< t_n = sqrt(q_n (1 - p_n))
};

/// Shape parameters of p_n and q_n (1-based n):
///   p_n ~ Beta((N-n) kappa + a + 1, (N-n) kappa + b + 1)
///   q_n ~ Beta((N-n) kappa, (N-n-1) kappa + a + b + 2)
struct BetaShape {
  double alpha;
  double beta;
  double mean() const noexcept { return alpha / (alpha + beta); }
};
BetaShape p_shape(const EnsembleConfig& cfg, int n);
BetaShape q_shape(const EnsembleConfig& cfg, int n);

BetaDraws sample_pq(const EnsembleConfig& cfg, Rng& rng);
BidiagonalFactor factor_from(const BetaDraws& draws);
BidiagonalFactor sample_model(const EnsembleConfig& cfg, Rng& rng);

/// B B^T: d_i = s_i^2 + t_{i-1}^2, e_i = s_i t_i.
SymmetricTridiagonal to_tridiagonal(const BidiagonalFactor& f);

/// Eigenvalues of one sampled matrix with weights 1/N. Rounding excursions
/// of at most 1e-12 outside [0, 1] are clamped; larger ones throw.
DiscreteMeasure empirical_measure(const EnsembleConfig& cfg, Rng& rng);

struct MonteCarloMoments {
  MomentVector mean;
  MomentVector standard_error;
  std::size_t trials = 0;
  std::size_t failures = 0;
};

struct MonteCarloOptions {
  std::uint64_t seed = 0;
  unsigned threads = 0;
  /// Trial failures above this fraction abort with ConvergenceError.
  double max_failure_rate = 1e-3;
};

/// Averages <L_N, x^k>, k = 0..K, over independent trials. Trial i draws from
/// Rng(seed, i), and the reduction runs in trial order, so the result does not
/// depend on the thread count.
MonteCarloMoments mc_moments(const EnsembleConfig& cfg, int max_k, std::size_t trials,
                             const MonteCarloOptions& options = {});

/// Eigenvalues of `trials` independent matrices, trial-major.
std::vector<double> sample_eigenvalues(const EnsembleConfig& cfg, std::size_t trials,
                                       const MonteCarloOptions& options = {});

/// Largest N and k accepted by exact_moment.
inline constexpr int kExactMomentMaxN = 8;
inline constexpr int kExactMomentMaxK = 8;

/// E[(1/N) tr J^k] in closed form: closed walks on the tridiagonal support,
/// expanded into monomials in p_n, 1 - p_n, q_n, 1 - q_n and integrated with
/// E[X^j (1-X)^l] = (alpha)_j (beta)_l / (alpha + beta)_{j+l}.
double exact_moment(int n, double kappa, double a, double b, int k);

/// Same expansion for E[J^k(1,1)].
double exact_moment_corner(int n, double kappa, double a, double b, int k);

/// kappa -> inf limits of p_n and q_n under (a, b) = (A kappa, B kappa).
double limit_p(double n_size, double A, double B, int n);
double limit_q(double n_size, double A, double B, int n);

/// Deterministic matrix with s_n^2 and t_n^2 replaced by their kappa -> inf
/// limits. `n_size` enters the formulas only, so the substitution
/// (N, A, B) -> (-c, -a, -b) can be evaluated; `size` is the matrix order.
SymmetricTridiagonal limit_tridiagonal(double n_size, double A, double B, int size);
SymmetricTridiagonal limit_tridiagonal(int n, const RegimeParams& r);

/// E[s_n^2] and E[t_n^2] at finite kappa in the (A kappa, B kappa) regime,
/// assembled as B B^T entries (d_i = E s_i^2 + E t_{i-1}^2, e_i = sqrt(E s_i^2 E t_i^2)).
SymmetricTridiagonal regime_mean_tridiagonal(int n, double kappa, const RegimeParams& r);

}  // namespace bje
