#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "bje/ensemble.hpp"
#include "bje/error.hpp"

namespace bje {
namespace {

// One pair of exponents (X^j, (1-X)^l) per variable; p_1..p_N then q_1..q_{N-1}.
constexpr int kMaxVars = 2 * kExactMomentMaxN - 1;
using Monomial = std::array<std::uint8_t, 2 * kMaxVars>;
using Polynomial = std::map<Monomial, double>;

struct Factor {
  int var;
  bool complement;  // 1 - X instead of X
};

// Entries of D^{-1} J D with unit sub-diagonal: same trace powers and (1,1) corner.
struct Entries {
  std::vector<std::vector<std::vector<Factor>>> diag;  // sum of products
  std::vector<std::vector<Factor>> super;               // single product
};

Entries build_entries(int n) {
  const auto p = [](int i) { return i - 1; };
  const auto q = [n](int i) { return n + i - 1; };
  Entries e;
  e.diag.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    auto& terms = e.diag[static_cast<std::size_t>(i - 1)];
    if (i == 1) {
      terms.push_back({{p(1), false}});
    } else {
      terms.push_back({{p(i), false}, {q(i - 1), true}});
      terms.push_back({{q(i - 1), false}, {p(i - 1), true}});
    }
    if (i < n) {
      std::vector<Factor> sup{{p(i), false}, {q(i), false}, {p(i), true}};
      if (i > 1) sup.push_back({q(i - 1), true});
      e.super.push_back(std::move(sup));
    }
  }
  return e;
}

void add_product(Polynomial& out, const Polynomial& src, const std::vector<Factor>& factors) {
  for (const auto& [mono, coef] : src) {
    Monomial m = mono;
    for (const auto& f : factors) ++m[static_cast<std::size_t>(2 * f.var + (f.complement ? 1 : 0))];
    out[m] += coef;
  }
}

// Row vector w_t = e_start^T M^t for t = k.
std::vector<Polynomial> walk(const Entries& e, int n, int start, int k) {
  std::vector<Polynomial> w(static_cast<std::size_t>(n));
  w[static_cast<std::size_t>(start)][Monomial{}] = 1.0;
  for (int step = 0; step < k; ++step) {
    std::vector<Polynomial> next(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const auto& src = w[static_cast<std::size_t>(i)];
      if (src.empty()) continue;
      for (const auto& term : e.diag[static_cast<std::size_t>(i)]) add_product(next[static_cast<std::size_t>(i)], src, term);
      // (w M)_{i+1} gets w_i M_{i,i+1}; (w M)_{i-1} gets w_i M_{i,i-1} = w_i.
      if (i + 1 < n) add_product(next[static_cast<std::size_t>(i + 1)], src, e.super[static_cast<std::size_t>(i)]);
      if (i > 0) add_product(next[static_cast<std::size_t>(i - 1)], src, {});
    }
    w = std::move(next);
  }
  return w;
}

double rising(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x + i;
  return r;
}

struct Shapes {
  std::vector<double> alpha;
  std::vector<double> beta;
};

Shapes shapes(int n, double kappa, double a, double b) {
  Shapes s;
  for (int i = 1; i <= n; ++i) {
    s.alpha.push_back((n - i) * kappa + a + 1.0);
    s.beta.push_back((n - i) * kappa + b + 1.0);
  }
  for (int i = 1; i < n; ++i) {
    s.alpha.push_back((n - i) * kappa);
    s.beta.push_back((n - i - 1) * kappa + a + b + 2.0);
  }
  return s;
}

double integrate(const Polynomial& poly, const Shapes& s) {
  const std::size_t vars = s.alpha.size();
  double total = 0.0;
  for (const auto& [mono, coef] : poly) {
    double term = coef;
    for (std::size_t v = 0; v < vars; ++v) {
      const int j = mono[2 * v];
      const int l = mono[2 * v + 1];
      if (j == 0 && l == 0) continue;
      term *= rising(s.alpha[v], j) * rising(s.beta[v], l) / rising(s.alpha[v] + s.beta[v], j + l);
    }
    total += term;
  }
  return total;
}

void validate(int n, double kappa, double a, double b, int k) {
  if (n < 1 || n > kExactMomentMaxN) throw DomainError("exact_moment: N out of range");
  if (k < 0 || k > kExactMomentMaxK) throw DomainError("exact_moment: k out of range");
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) throw DomainError("exact_moment: kappa must be nonnegative");
  if (!(a > -1.0) || !(b > -1.0)) throw DomainError("exact_moment: require a > -1 and b > -1");
}

}  // namespace

double exact_moment(int n, double kappa, double a, double b, int k) {
  validate(n, kappa, a, b, k);
  const auto e = build_entries(n);
  const auto s = shapes(n, kappa, a, b);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += integrate(walk(e, n, i, k)[static_cast<std::size_t>(i)], s);
  return sum / n;
}

double exact_moment_corner(int n, double kappa, double a, double b, int k) {
  validate(n, kappa, a, b, k);
  const auto e = build_entries(n);
  return integrate(walk(e, n, 0, k)[0], shapes(n, kappa, a, b));
}

}  // namespace bje
