#pragma once

#include <complex>

namespace bje {

/// Real parameters alpha, beta, gamma_param and a complex argument of the
/// Gauss function 2F1.
struct Hyp2F1Request {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma_param = 1.0;
  std::complex<double> argument{};
};

struct Hyp2F1Result {
  std::complex<double> value;
  double error_estimate = 0.0;  ///< relative
};

/// How the argument was mapped before summing a power series.
enum class Hyp2F1Route { Direct, Pfaff, OneMinus, Inverse, InverseOneMinus, OneMinusInverse };

/// Principal branch of 2F1(alpha, beta; gamma_param; x). Chooses among the
/// direct series and the linear transformations to x/(x-1), 1-x, 1/x,
/// 1/(1-x), 1-1/x the one with the smallest mapped modulus whose connection
/// coefficients are finite. Terminating series are summed directly.
///
/// Throws DomainError for a nonpositive-integer gamma_param,
/// UnsupportedRegion for x on [1, inf) or when no mapped modulus is below the
/// supported radius.
Hyp2F1Result hyp2f1(const Hyp2F1Request& r);

std::complex<double> hyp2f1(double alpha, double beta, double gamma_param, std::complex<double> x);
double hyp2f1(double alpha, double beta, double gamma_param, double x);

/// Direct power series only; throws UnsupportedRegion for |x| >= 1 unless terminating.
Hyp2F1Result hyp2f1_series(const Hyp2F1Request& r);

/// Evaluate through one specific route. Throws UnsupportedRegion when the
/// route is unavailable (degenerate parameters or mapped modulus >= 1).
Hyp2F1Result hyp2f1_via(const Hyp2F1Request& r, Hyp2F1Route route);

/// Route hyp2f1 would pick.
Hyp2F1Route hyp2f1_route(const Hyp2F1Request& r);

}  // namespace bje
