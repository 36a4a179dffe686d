#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "bje/coeffs.hpp"
#include "bje/eigen.hpp"
#include "bje/tridiagonal.hpp"

namespace bje {

/// Relative tolerance used for deterministic identities.
inline constexpr double kDefaultRelTol = 1e-10;

/// Finite probability measure: strictly increasing nodes, nonnegative weights.
struct DiscreteMeasure {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
  /// Sum of w_i x_i^k.
  double moment(int k) const;
  double total_mass() const;
};

/// Moments m_0..m_K of a measure.
class MomentVector {
 public:
  MomentVector() = default;
  explicit MomentVector(std::vector<double> m) : m_(std::move(m)) {}

  std::size_t size() const noexcept { return m_.size(); }
  /// Highest stored order K.
  int order() const noexcept { return static_cast<int>(m_.size()) - 1; }
  double operator[](std::size_t k) const { return m_[k]; }
  double& operator[](std::size_t k) { return m_[k]; }
  const std::vector<double>& values() const noexcept { return m_; }
  std::vector<double>& values() noexcept { return m_; }

  /// m_0 == 1 and 1 >= m_1 >= ... >= m_K >= 0, up to `tol`.
  bool is_monotone_unit(double tol = 0.0) const;

 private:
  std::vector<double> m_;
};

/// e_1^T T^k e_1 by k applications of T to e_1. Requires size >= floor(k/2)+1.
double moment11(const SymmetricTridiagonal& t, int k);
/// All of e_1^T T^j e_1 for j = 0..K in one pass.
MomentVector moments11(const SymmetricTridiagonal& t, int max_k);

/// J^k(1,1) for the model's Jacobi matrix, on the floor(k/2)+2 truncation.
double moment11(ModelKind kind, const JacobiParams& p, int k);
MomentVector moments11(ModelKind kind, const JacobiParams& p, int max_k);

/// Golub-Welsch rule from the M x M truncation.
DiscreteMeasure gauss_quadrature(const SymmetricTridiagonal& t);
DiscreteMeasure gauss_quadrature(ModelKind kind, const JacobiParams& p, int m);

/// How the continued fraction is closed off at its last level.
enum class CfTail {
  Zero,        ///< tail m-function set to 0
  Asymptotic,  ///< m-function of the constant Jacobi matrix (1/2, 1/4)
};

struct StieltjesValue {
  std::complex<double> value;
  double change = 0.0;    ///< |S(depth) - S(depth/2)|
  bool converged = true;  ///< change <= tolerance
};

/// S(z) = int dmu(x)/(x - z) from the backward recursion
/// S_n = -1 / (z - d_n + e_n^2 S_{n+1}). Uses all of `t`.
std::complex<double> stieltjes_cf(const SymmetricTridiagonal& t, std::complex<double> z,
                                  CfTail tail = CfTail::Zero);

/// Continued fraction of the model's Jacobi matrix at the given depth, with
/// a depth-halving convergence check.
StieltjesValue stieltjes_cf(ModelKind kind, const JacobiParams& p, std::complex<double> z, int depth,
                            CfTail tail = CfTail::Zero, double tolerance = kDefaultRelTol);

/// Stieltjes transform of the semicircle law on [0, 1], the spectral measure
/// of the constant Jacobi matrix with diagonal 1/2 and off-diagonal 1/4.
std::complex<double> semicircle_stieltjes(std::complex<double> z);

}  // namespace bje
