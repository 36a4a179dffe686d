#include "bje/tridiagonal.hpp"

#include <algorithm>
#include <cmath>

#include "bje/error.hpp"

namespace bje {

SymmetricTridiagonal::SymmetricTridiagonal(std::vector<double> diag, std::vector<double> offdiag)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
  if (diag_.empty() ? !offdiag_.empty() : offdiag_.size() + 1 != diag_.size()) {
    throw DomainError("SymmetricTridiagonal: off-diagonal length must be size - 1");
  }
  auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(diag_.begin(), diag_.end(), finite) ||
      !std::all_of(offdiag_.begin(), offdiag_.end(), finite)) {
    throw DomainError("SymmetricTridiagonal: entries must be finite");
  }
}

SymmetricTridiagonal SymmetricTridiagonal::leading(std::size_t m) const {
  if (m > size()) throw DomainError("SymmetricTridiagonal::leading: block larger than matrix");
  if (m == 0) return {};
  return {std::vector<double>(diag_.begin(), diag_.begin() + static_cast<std::ptrdiff_t>(m)),
          std::vector<double>(offdiag_.begin(), offdiag_.begin() + static_cast<std::ptrdiff_t>(m - 1))};
}

void SymmetricTridiagonal::multiply(std::span<const double> x, std::span<double> y) const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    double acc = diag_[i] * x[i];
    if (i > 0) acc += offdiag_[i - 1] * x[i - 1];
    if (i + 1 < n) acc += offdiag_[i] * x[i + 1];
    y[i] = acc;
  }
}

double SymmetricTridiagonal::norm_inf() const noexcept {
  double best = 0.0;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::abs(diag_[i]);
    if (i > 0) row += std::abs(offdiag_[i - 1]);
    if (i + 1 < n) row += std::abs(offdiag_[i]);
    best = std::max(best, row);
  }
  return best;
}

}  // namespace bje
