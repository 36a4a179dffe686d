#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bje {

/// Symmetric tridiagonal matrix stored as its diagonal (length M) and
/// off-diagonal (length M-1).
class SymmetricTridiagonal {
 public:
  SymmetricTridiagonal() = default;
  SymmetricTridiagonal(std::vector<double> diag, std::vector<double> offdiag);

  std::size_t size() const noexcept { return diag_.size(); }
  bool empty() const noexcept { return diag_.empty(); }

  std::span<const double> diag() const noexcept { return diag_; }
  std::span<const double> offdiag() const noexcept { return offdiag_; }
  double diag(std::size_t i) const { return diag_[i]; }
  double offdiag(std::size_t i) const { return offdiag_[i]; }

  /// Leading principal block of the given size.
  SymmetricTridiagonal leading(std::size_t m) const;

  /// y = T x.
  void multiply(std::span<const double> x, std::span<double> y) const;

  /// Max-row-sum norm, an upper bound on the spectral norm.
  double norm_inf() const noexcept;

 private:
  std::vector<double> diag_;
  std::vector<double> offdiag_;
};

}  // namespace bje
