#pragma once

namespace bje {

/// log|Gamma(x)| together with the sign of Gamma(x).
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;

  double value() const;
  SignedLog& operator*=(const SignedLog& o) noexcept {
    log_abs += o.log_abs;
    sign *= o.sign;
    return *this;
  }
  SignedLog& operator/=(const SignedLog& o) noexcept {
    log_abs -= o.log_abs;
    sign *= o.sign;
    return *this;
  }
  friend SignedLog operator*(SignedLog l, const SignedLog& r) noexcept { return l *= r; }
  friend SignedLog operator/(SignedLog l, const SignedLog& r) noexcept { return l /= r; }
};

/// Throws PoleError at x in {0, -1, -2, ...}.
SignedLog ln_gamma(double x);

/// 1/Gamma(x), exactly 0 at the poles.
double rgamma(double x);

/// True when x is within `tol` of an integer <= 0.
bool is_nonpositive_integer(double x, double tol = 0.0);

/// Rising factorial (q)_n = q (q+1) ... (q+n-1); (q)_0 = 1.
double pochhammer(double q, int n);

/// Signed log of a real number.
SignedLog signed_log(double x);

}  // namespace bje
