#include "bje/gamma.hpp"

#include <cmath>
#include <string>

#include "bje/error.hpp"

namespace bje {

double SignedLog::value() const { return sign * std::exp(log_abs); }

bool is_nonpositive_integer(double x, double tol) {
  if (x > tol) return false;
  return std::abs(x - std::nearbyint(x)) <= tol;
}

SignedLog ln_gamma(double x) {
  if (is_nonpositive_integer(x)) {
    throw PoleError("ln_gamma: pole at x = " + std::to_string(x));
  }
  if (std::isnan(x)) throw DomainError("ln_gamma: NaN argument");
  int sign = 1;
  // Reentrant variant; std::lgamma writes the global signgam.
  const double v = ::lgamma_r(x, &sign);
  return {v, sign < 0 ? -1 : 1};
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  const auto g = ln_gamma(x);
  return g.sign * std::exp(-g.log_abs);
}

double pochhammer(double q, int n) {
  if (n < 0) throw DomainError("pochhammer: n must be nonnegative");
  double acc = 1.0;
  for (int i = 0; i < n; ++i) acc *= q + i;
  return acc;
}

SignedLog signed_log(double x) {
  if (x == 0.0) throw DomainError("signed_log: zero has no logarithm");
  return {std::log(std::abs(x)), x < 0 ? -1 : 1};
}

}  // namespace bje
