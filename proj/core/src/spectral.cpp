#include "bje/spectral.hpp"

#include <cmath>
#include <numeric>

#include "bje/error.hpp"

namespace bje {

double DiscreteMeasure::moment(int k) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * std::pow(nodes[i], k);
  return acc;
}

double DiscreteMeasure::total_mass() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }

bool MomentVector::is_monotone_unit(double tol) const {
  if (m_.empty() || std::abs(m_[0] - 1.0) > tol) return false;
  for (std::size_t k = 1; k < m_.size(); ++k) {
    if (m_[k] > m_[k - 1] + tol || m_[k] < -tol) return false;
  }
  return true;
}

MomentVector moments11(const SymmetricTridiagonal& t, int max_k) {
  if (max_k < 0) throw DomainError("moments11: order must be nonnegative");
  if (t.size() < static_cast<std::size_t>(max_k / 2 + 1)) {
    throw DomainError("moments11: truncation too small for the requested order");
  }
  std::vector<double> v(t.size(), 0.0), w(t.size(), 0.0);
  v[0] = 1.0;
  std::vector<double> m(static_cast<std::size_t>(max_k) + 1);
  m[0] = 1.0;
  for (int k = 1; k <= max_k; ++k) {
    t.multiply(v, w);
    v.swap(w);
    m[static_cast<std::size_t>(k)] = v[0];
  }
  return MomentVector(std::move(m));
}

double moment11(const SymmetricTridiagonal& t, int k) { return moments11(t, k)[static_cast<std::size_t>(k)]; }

MomentVector moments11(ModelKind kind, const JacobiParams& p, int max_k) {
  if (max_k < 0) throw DomainError("moments11: order must be nonnegative");
  return moments11(tridiag_entries(kind, p, max_k / 2 + 2), max_k);
}

double moment11(ModelKind kind, const JacobiParams& p, int k) {
  return moments11(kind, p, k)[static_cast<std::size_t>(k)];
}

DiscreteMeasure gauss_quadrature(const SymmetricTridiagonal& t) {
  auto eig = eigen_tridiagonal(t, true);
  DiscreteMeasure rule;
  rule.nodes = std::move(eig.values);
  rule.weights.reserve(rule.nodes.size());
  for (double v : eig.first_components) rule.weights.push_back(v * v);
  return rule;
}

DiscreteMeasure gauss_quadrature(ModelKind kind, const JacobiParams& p, int m) {
  if (m < 1) throw DomainError("gauss_quadrature: need at least one node");
  return gauss_quadrature(tridiag_entries(kind, p, m));
}

std::complex<double> semicircle_stieltjes(std::complex<double> z) {
  // S solves S = -1 / (z - 1/2 + S/16); take the Herglotz root.
  const std::complex<double> w = z - 0.5;
  const std::complex<double> r = std::sqrt(w * w - 0.25);
  const std::complex<double> s1 = 8.0 * (-w + r);
  const std::complex<double> s2 = 8.0 * (-w - r);
  if (z.imag() != 0.0) return s1.imag() * z.imag() > 0.0 ? s1 : s2;
  // Real z off [0, 1]: the branch that decays like -1/z.
  return std::abs(s1) < std::abs(s2) ? s1 : s2;
}

std::complex<double> stieltjes_cf(const SymmetricTridiagonal& t, std::complex<double> z, CfTail tail) {
  const std::size_t n = t.size();
  if (n == 0) throw DomainError("stieltjes_cf: empty matrix");
  // Asymptotic closure couples the last level to the tail with e = 1/4.
  std::complex<double> s = 0.0;
  double coupling = 0.0;
  if (tail == CfTail::Asymptotic) {
    s = semicircle_stieltjes(z);
    coupling = 1.0 / 16.0;
  }
  for (std::size_t i = n; i-- > 0;) {
    const double e2 = i + 1 < n ? t.offdiag(i) * t.offdiag(i) : coupling;
    s = -1.0 / (z - t.diag(i) + e2 * s);
  }
  return s;
}

StieltjesValue stieltjes_cf(ModelKind kind, const JacobiParams& p, std::complex<double> z, int depth,
                            CfTail tail, double tolerance) {
  if (depth < 1) throw DomainError("stieltjes_cf: depth must be >= 1");
  if (z.imag() == 0.0 && z.real() >= 0.0 && z.real() <= 1.0) {
    throw DomainError("stieltjes_cf: z on the support [0, 1]");
  }
  const auto t = tridiag_entries(kind, p, depth);
  StieltjesValue out;
  out.value = stieltjes_cf(t, z, tail);
  const auto half = stieltjes_cf(t.leading(static_cast<std::size_t>(std::max(depth / 2, 1))), z, tail);
  out.change = std::abs(out.value - half);
  out.converged = out.change <= tolerance * std::max(1.0, std::abs(out.value));
  return out;
}

}  // namespace bje
