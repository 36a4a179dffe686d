#include <cmath>

#include "bje/analytic.hpp"
#include "bje/error.hpp"
#include "bje/gamma.hpp"
#include "bje/hypergeom.hpp"

namespace bje {
namespace {

void require_noninteger_a(const JacobiParams& p, const char* what) {
  if (p.a() == std::nearbyint(p.a())) throw DomainError(std::string(what) + ": a must not be an integer");
}

// Three-term recurrence shared by R_n and P_n, advanced from (prev, cur) at index n.
double step(const JacobiParams& p, int n, double x, double prev, double cur) {
  const double a = p.a(), c = p.c();
  const double lam = lambda_n(p, n);
  const double mu = mu_n(p, n);
  double rhs = (x - lam - mu) * cur;
  // At n + c == 0, R_{-1} = 0 annihilates the singular (n+c)^{-1} factor.
  if (n + c != 0.0) rhs -= (n + c + a) / (n + c) * mu * prev;
  return rhs / ((n + c + 1) / (n + c + a + 1) * lam);
}

FormulaValue difference(double t1, double t2, double scale) {
  const double diff = t1 - t2;
  const double cond = diff != 0.0 ? (std::abs(t1) + std::abs(t2)) / std::abs(diff) : INFINITY;
  return {scale * diff, cond};
}

}  // namespace

double recurrence_Rn(const JacobiParams& p, int n, double x) {
  if (n < -1) throw DomainError("recurrence_Rn: n must be >= -1");
  if (n == -1) return 0.0;
  double prev = 0.0, cur = 1.0;
  for (int k = 0; k < n; ++k) {
    const double next = step(p, k, x, prev, cur);
    prev = cur;
    cur = next;
  }
  return cur;
}

FormulaValue wimp_Rn_detail(const JacobiParams& p, int n, double x) {
  if (n < -1) throw DomainError("wimp_Rn: n must be >= -1");
  if (n == -1) return {0.0, 1.0};
  require_noninteger_a(p, "wimp_Rn");
  const double a = p.a(), c = p.c(), g = p.gamma();
  const double nn = n;

  // (-1)^n Gamma(c+1) Gamma(g+c) / (a Gamma(a+c) (g+2c-1) Gamma(g+c-a-1)).
  SignedLog prefactor = ln_gamma(c + 1) * ln_gamma(g + c) / (signed_log(a) * ln_gamma(a + c) *
                                                             signed_log(g + 2 * c - 1) * ln_gamma(g + c - a - 1));
  if (n % 2 != 0) prefactor.sign = -prefactor.sign;

  const SignedLog k1 = ln_gamma(g + c - a - 1) * ln_gamma(nn + a + c + 1) / (ln_gamma(g + c - 1) * ln_gamma(nn + c + 1));
  const double t1 = k1.value() * hyp2f1(c, 2 - g - c, 1 - a, x) * hyp2f1(-nn - c, nn + g + c, a + 1, x);

  double t2 = 0.0;
  if (!is_nonpositive_integer(c)) {
    const SignedLog k2 = ln_gamma(a + c) * ln_gamma(nn + g + c - a) / (ln_gamma(c) * ln_gamma(nn + c + g));
    t2 = k2.value() * hyp2f1(1 - c, g + c - 1, a + 1, x) * hyp2f1(nn + c + 1, 1 - nn - g - c, 1 - a, x);
  }
  return difference(t1, t2, prefactor.value());
}

double wimp_Rn(const JacobiParams& p, int n, double x) { return wimp_Rn_detail(p, n, x).value; }

double Rn(const JacobiParams& p, int n, double x) {
  if (p.a() != std::nearbyint(p.a())) {
    const auto w = wimp_Rn_detail(p, n, x);
    if (w.condition <= kCancellationLimit) return w.value;
  }
  return recurrence_Rn(p, n, x);
}

double Pn_recurrence(const JacobiParams& p, int n, double x) {
  if (n < 0) throw DomainError("Pn_recurrence: n must be nonnegative");
  if (n == 0) return 1.0;
  const double a = p.a(), c = p.c();
  const double lh = lambda_hat0(p);
  double prev = 1.0;
  double cur = (x - lh) / ((c + 1) / (c + a + 1) * lh);
  for (int k = 1; k < n; ++k) {
    const double next = step(p, k, x, prev, cur);
    prev = cur;
    cur = next;
  }
  return cur;
}

FormulaValue Pn_explicit_detail(const JacobiParams& p, int n, double x) {
  if (n < 0) throw DomainError("Pn_explicit: n must be nonnegative");
  require_noninteger_a(p, "Pn_explicit");
  const double a = p.a(), b = p.b(), c = p.c(), g = p.gamma();
  const double nn = n;

  const SignedLog k1 = ln_gamma(c + 1) * ln_gamma(nn + c + a + 1) / (ln_gamma(nn + c + 1) * ln_gamma(c + a + 1));
  const double t1 = k1.value() * hyp2f1(c, -c - g, -a, x) * hyp2f1(-c - nn, c + nn + g, 1 + a, x);

  double t2 = 0.0;
  if (c != 0.0) {
    const SignedLog k2 = signed_log(c) * ln_gamma(g + c + 1) * ln_gamma(nn + c + b + 1) /
                         (signed_log(a * (a + 1)) * ln_gamma(g + nn + c) * ln_gamma(c + b + 1));
    t2 = k2.value() * x * (1 - x) * hyp2f1(1 - c, 1 + c + g, 2 + a, x) *
         hyp2f1(1 + c + nn, -c - nn - a - b, 1 - a, x);
  }
  return difference(t1, t2, n % 2 == 0 ? 1.0 : -1.0);
}

double Pn_explicit(const JacobiParams& p, int n, double x) { return Pn_explicit_detail(p, n, x).value; }

double Pn_combination(const JacobiParams& p, int n, double x) {
  if (n < 0) throw DomainError("Pn_combination: n must be nonnegative");
  const double b = p.b(), c = p.c(), g = p.gamma();
  const double k0 = c * (c + b) * (2 * c + g + 1) / ((c + 1) * (2 * c + g - 1) * (c + g));
  const double k1 = c * (2 * c + g + 1) / ((c + 1) * (c + g));
  const double shifted = n >= 1 ? wimp_Rn(p.with_c(p.c() + 1), n - 1, x) : 0.0;
  return wimp_Rn(p, n, x) + (k0 - k1 * x) * shifted;
}

double zeta_n(const JacobiParams& p, int n) {
  if (n < 0) throw DomainError("zeta_n: n must be nonnegative");
  if (n == 0) return 1.0;
  const double a = p.a(), c = p.c();
  double log_ratio = -std::log(lambda_hat0(p));
  for (int i = 1; i <= n; ++i) log_ratio += std::log(mu_n(p, i));
  for (int i = 1; i < n; ++i) log_ratio -= std::log(lambda_n(p, i));
  // (c+a+1)_n / (c+1)_n = Gamma(c+a+1+n) Gamma(c+1) / (Gamma(c+a+1) Gamma(c+1+n)).
  const SignedLog poch = ln_gamma(c + a + 1 + n) * ln_gamma(c + 1) / (ln_gamma(c + a + 1) * ln_gamma(c + 1 + n));
  return std::exp(0.5 * log_ratio + poch.log_abs);
}

double zeta_asymptotic(const JacobiParams& p, int n) {
  if (n < 1) throw DomainError("zeta_asymptotic: n must be >= 1");
  return std::sqrt(density_constant(p) / (2.0 * n));
}

}  // namespace bje
