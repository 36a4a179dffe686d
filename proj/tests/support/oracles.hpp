#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bje/tridiagonal.hpp"

namespace bje::testing {

using Rational = boost::multiprecision::cpp_rational;

/// Exact decimal: digits / 10^scale.
inline Rational dec(long long digits, int scale) {
  Rational r(digits);
  for (int i = 0; i < scale; ++i) r /= 10;
  return r;
}

inline double to_double(const Rational& r) { return static_cast<double>(r); }

/// Number of eigenvalues of t strictly below x (Sturm sequence count).
inline int sturm_count(const SymmetricTridiagonal& t, double x) {
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double e2 = i == 0 ? 0.0 : t.offdiag(i - 1) * t.offdiag(i - 1);
    q = t.diag(i) - x - (i == 0 ? 0.0 : e2 / q);
    if (q == 0.0) q = -1e-300;
    if (q < 0.0) ++count;
  }
  return count;
}

/// All eigenvalues by bisection on the Sturm count, ascending.
inline std::vector<double> bisection_eigenvalues(const SymmetricTridiagonal& t) {
  const double r = t.norm_inf() + 1.0;
  std::vector<double> out;
  for (std::size_t j = 0; j < t.size(); ++j) {
    double lo = -r, hi = r;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
      const double mid = 0.5 * (lo + hi);
      if (sturm_count(t, mid) > static_cast<int>(j)) hi = mid;
      else lo = mid;
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

/// Dense row-major square matrix.
struct Dense {
  explicit Dense(std::size_t n) : n(n), a(n * n, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  std::size_t n;
  std::vector<double> a;
};

inline Dense multiply_transpose(const Dense& b) {
  Dense c(b.n);
  for (std::size_t i = 0; i < b.n; ++i)
    for (std::size_t j = 0; j < b.n; ++j)
      for (std::size_t k = 0; k < b.n; ++k) c(i, j) += b(i, k) * b(j, k);
  return c;
}

/// Stieltjes transform of the uniform law on [0, 1]: log((z-1)/z), principal branch.
inline std::complex<double> uniform_stieltjes(std::complex<double> z) { return std::log((z - 1.0) / z); }

}  // namespace bje::testing
