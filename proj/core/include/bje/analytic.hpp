#pragma once

#include <complex>
#include <vector>

#include "bje/coeffs.hpp"
#include "bje/spectral.hpp"

namespace bje {

/// Closed-form Stieltjes transform S(z) = int dnu(x)/(x - z) of the spectral
/// measure of Model I, II or III (ClassicalJacobi is Model I at c = 0), as a
/// ratio of Gauss functions at 1/z:
///   I:   -F(c+1, c+a+1; 2c+a+b+2; 1/z) / (z F(c, c+a;   2c+a+b;   1/z))
///   II:  -F(c+1, c+a+1; 2c+a+b+2; 1/z) / (z F(c, c+a+1; 2c+a+b+1; 1/z))
///   III: -F(c+1, c+a+1; 2c+a+b+2; 1/z) / (z F(c, c+a+1; 2c+a+b+2; 1/z))
/// Throws DomainError for z in [0, 1] and UnsupportedRegion when 2F1 has no
/// usable expansion at 1/z.
std::complex<double> stieltjes_closed(ModelKind kind, const JacobiParams& p, std::complex<double> z);

/// Closed form when available, otherwise the continued fraction at `cf_depth`.
std::complex<double> stieltjes_transform(ModelKind kind, const JacobiParams& p, std::complex<double> z,
                                         int cf_depth = 400);

/// Gamma(c+1) Gamma(a+1) / Gamma(1+c+a) * F(c, -c-a-b-1; -a; x).
double U_of_x(const JacobiParams& p, double x);

/// -pi c Gamma(c+a+b+2) / (sin(pi a) Gamma(1+c+b) Gamma(2+a))
///   * (1-x)^(1+b) x^(1+a) F(1-c, 2+c+a+b; 2+a; x).
double V_of_x(const JacobiParams& p, double x);

/// Gamma(c+1) Gamma(c+a+b+2) / (Gamma(c+a+1) Gamma(c+b+1)).
double density_constant(const JacobiParams& p);

/// Density of nu_{a,b,c} on (0, 1):
///   density_constant * x^a (1-x)^b / (U^2 + 2 U V cos(pi a) + V^2).
/// Requires a non-integer and either c == 0 or (c > 0, c+a > 0, c+b > 0);
/// otherwise throws DomainError (use density_numeric instead).
double density_III(const JacobiParams& p, double x);

/// True when density_III accepts `p`.
bool density_III_defined(const JacobiParams& p);

struct DensityProfile {
  JacobiParams params;
  std::vector<double> grid;
  std::vector<double> values;
};

/// density_III on the interior grid x_i = i / (n + 1), i = 1..n.
DensityProfile density_profile(const JacobiParams& p, int n);

struct NumericDensityOptions {
  int depth = 1000;
  bool richardson = false;  ///< combine eps and eps/2 as 2 f(eps/2) - f(eps)
};

/// Stieltjes-Perron inversion Im S(x + i eps) / pi, with S from the
/// continued fraction closed by the asymptotic semicircle tail.
double density_numeric(ModelKind kind, const JacobiParams& p, double x, double eps,
                       const NumericDensityOptions& options = {});

/// A closed-form evaluation that subtracts two large terms.
struct FormulaValue {
  double value = 0.0;
  /// (|t1| + |t2|) / |t1 - t2|; rounding is amplified by roughly this factor.
  double condition = 1.0;
};

/// Above this condition estimate the recurrence route is authoritative.
inline constexpr double kCancellationLimit = 1e6;

/// R_n^{a,b}(x; c) from the three-term recurrence
///   (n+c+1)/(n+c+a+1) lambda_n R_{n+1} = (x - lambda_n - mu_n) R_n - (n+c+a)/(n+c) mu_n R_{n-1},
/// R_{-1} = 0, R_0 = 1. Returns 0 for n = -1.
double recurrence_Rn(const JacobiParams& p, int n, double x);

/// Closed form of R_n as a difference of two products of Gauss functions.
/// Requires a non-integer.
FormulaValue wimp_Rn_detail(const JacobiParams& p, int n, double x);
double wimp_Rn(const JacobiParams& p, int n, double x);

/// wimp_Rn unless its condition exceeds kCancellationLimit, then recurrence_Rn.
double Rn(const JacobiParams& p, int n, double x);

/// Model III polynomials: P_0 = 1, (c+1)/(c+a+1) lambda_hat0 P_1 = x - lambda_hat0,
/// then the R_n recurrence for n >= 1.
double Pn_recurrence(const JacobiParams& p, int n, double x);

/// Closed form of P_n from products of Gauss functions. Requires a non-integer.
FormulaValue Pn_explicit_detail(const JacobiParams& p, int n, double x);
double Pn_explicit(const JacobiParams& p, int n, double x);

/// P_n = R_n(x; c) + (k0 - k1 x) R_{n-1}(x; c+1), both R from the closed form.
double Pn_combination(const JacobiParams& p, int n, double x);

/// Norm of P_n in L^2(nu): sqrt(mu_1..mu_n / (lambda_hat0 lambda_1..lambda_{n-1})) (c+a+1)_n / (c+1)_n.
double zeta_n(const JacobiParams& p, int n);

/// Large-n form (2n)^{-1/2} sqrt(density_constant).
double zeta_asymptotic(const JacobiParams& p, int n);

}  // namespace bje
