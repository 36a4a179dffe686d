#include "bje/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "bje/error.hpp"

namespace bje {
namespace {

constexpr int kMaxSweeps = 30;

// Implicit QL on (d, e) where e[i] couples i and i+1 and e[n-1] is scratch.
// Every plane rotation acting on columns (i, i+1) is reported to `rotate`.
template <class Rotate>
void ql_implicit(std::vector<double>& d, std::vector<double>& e, Rotate&& rotate) {
  const int n = static_cast<int>(d.size());
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        if (std::abs(e[m]) <= eps * (std::abs(d[m]) + std::abs(d[m + 1]))) break;
      }
      if (m == l) break;
      if (iter++ == kMaxSweeps) {
        throw ConvergenceError("eigen_tridiagonal: no convergence for eigenvalue " + std::to_string(l));
      }
      // Wilkinson shift from the leading 2x2 block.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      int i = m - 1;
      bool underflow = false;
      for (; i >= l; --i) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        rotate(i, c, s);
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

std::vector<std::size_t> ascending_order(const std::vector<double>& values) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });
  return idx;
}

void load(const SymmetricTridiagonal& t, std::vector<double>& d, std::vector<double>& e) {
  d.assign(t.diag().begin(), t.diag().end());
  e.assign(t.size(), 0.0);
  std::copy(t.offdiag().begin(), t.offdiag().end(), e.begin());
}

}  // namespace

EigenResult eigen_tridiagonal(const SymmetricTridiagonal& t, bool want_first_components) {
  std::vector<double> d, e;
  load(t, d, e);
  const std::size_t n = d.size();

  std::vector<double> z;
  if (want_first_components) {
    z.assign(n, 0.0);
    if (n > 0) z[0] = 1.0;
    ql_implicit(d, e, [&](int i, double c, double s) {
      const double f = z[i + 1];
      z[i + 1] = s * z[i] + c * f;
      z[i] = c * z[i] - s * f;
    });
  } else {
    ql_implicit(d, e, [](int, double, double) {});
  }

  const auto order = ascending_order(d);
  EigenResult out;
  out.values.reserve(n);
  for (auto j : order) out.values.push_back(d[j]);
  if (want_first_components) {
    out.first_components.reserve(n);
    for (auto j : order) out.first_components.push_back(z[j]);
  }
  return out;
}

EigenSystem eigen_tridiagonal_full(const SymmetricTridiagonal& t) {
  std::vector<double> d, e;
  load(t, d, e);
  const std::size_t n = d.size();

  // Row-major accumulation of the rotations applied to the identity; column j
  // ends up holding the eigenvector of d[j].
  std::vector<double> q(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) q[i * n + i] = 1.0;
  ql_implicit(d, e, [&](int i, double c, double s) {
    for (std::size_t k = 0; k < n; ++k) {
      double* row = &q[k * n];
      const double f = row[i + 1];
      row[i + 1] = s * row[i] + c * f;
      row[i] = c * row[i] - s * f;
    }
  });

  const auto order = ascending_order(d);
  EigenSystem out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (auto j : order) {
    out.values.push_back(d[j]);
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = q[k * n + j];
    out.vectors.push_back(std::move(v));
  }
  return out;
}

}  // namespace bje
