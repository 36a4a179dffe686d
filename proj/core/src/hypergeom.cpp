#include "bje/hypergeom.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "bje/error.hpp"
#include "bje/gamma.hpp"

namespace bje {
namespace {

using cld = std::complex<long double>;

constexpr int kMaxTerms = 100000;
constexpr long double kStopRatio = 1e-16L;
constexpr int kStopRun = 3;
constexpr double kDirectRadius = 0.7;
// Largest mapped modulus accepted for a transformed series.
constexpr double kSupportedRadius = 0.95;
// Parameter differences closer than this to an integer make the connection
// coefficients singular.
constexpr double kIntegerGuard = 1e-8;
constexpr double kDoubleEps = std::numeric_limits<double>::epsilon();

struct Series {
  cld value{1.0L, 0.0L};
  long double max_term = 1.0L;
  long double last_term = 0.0L;
  int terms = 1;
  bool terminated = false;
  bool converged = false;
};

bool is_exact_nonpositive_integer(double v) { return v <= 0.0 && v == std::nearbyint(v); }

bool near_integer(double v) { return std::abs(v - std::nearbyint(v)) <= kIntegerGuard; }

Series gauss_series(double a, double b, double c, std::complex<double> x) {
  const long double la = a, lb = b, lc = c;
  const cld lx(x.real(), x.imag());
  Series s;
  cld term(1.0L, 0.0L);
  int run = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    const long double ratio = (la + n) * (lb + n) / ((lc + n) * (n + 1.0L));
    if (ratio == 0.0L) {
      s.terminated = true;
      s.converged = true;
      s.last_term = 0.0L;
      return s;
    }
    term *= ratio * lx;
    s.value += term;
    ++s.terms;
    const long double mag = std::abs(term);
    s.max_term = std::max(s.max_term, mag);
    s.last_term = mag;
    if (mag <= kStopRatio * std::abs(s.value) || mag <= 1e-24L * s.max_term) {
      if (++run >= kStopRun) {
        s.converged = true;
        return s;
      }
    } else {
      run = 0;
    }
  }
  return s;
}

// Relative error bound: truncation tail plus accumulated rounding.
double series_error(const Series& s, double modulus) {
  const long double mag = std::abs(s.value);
  const long double rounding = std::numeric_limits<long double>::epsilon() * s.max_term *
                               std::sqrt(static_cast<long double>(s.terms));
  long double trunc = 0.0L;
  if (!s.terminated) trunc = s.last_term * (modulus < 1.0 ? 1.0L / (1.0L - modulus) : 1.0L);
  if (mag == 0.0L) return s.terminated ? kDoubleEps : std::numeric_limits<double>::infinity();
  return std::max(kDoubleEps, static_cast<double>((trunc + rounding) / mag));
}

Hyp2F1Result finish(const Series& s, double modulus, const char* where) {
  if (!s.converged) {
    throw UnsupportedRegion(std::string("hyp2f1: series did not converge (") + where + ")");
  }
  return {{static_cast<double>(s.value.real()), static_cast<double>(s.value.imag())}, series_error(s, modulus)};
}

// Gamma(n1) Gamma(n2) / (Gamma(d1) Gamma(d2)); zero when a denominator sits on a pole.
double gamma_quotient(double n1, double n2, double d1, double d2) {
  if (is_nonpositive_integer(d1) || is_nonpositive_integer(d2)) return 0.0;
  const SignedLog q = ln_gamma(n1) * ln_gamma(n2) / (ln_gamma(d1) * ln_gamma(d2));
  return q.value();
}

struct Term {
  double coefficient;
  std::complex<double> prefactor;
  double a, b, c;
};

Hyp2F1Result combine(const std::array<Term, 2>& terms, std::complex<double> w, const char* where) {
  std::complex<double> total = 0.0;
  double abs_err = 0.0;
  double abs_scale = 0.0;
  for (const auto& t : terms) {
    if (t.coefficient == 0.0) continue;
    const Hyp2F1Result part = finish(gauss_series(t.a, t.b, t.c, w), std::abs(w), where);
    const std::complex<double> contribution = t.coefficient * t.prefactor * part.value;
    total += contribution;
    abs_err += std::abs(contribution) * part.error_estimate;
    abs_scale += std::abs(contribution);
  }
  const double mag = std::abs(total);
  // Connection coefficients come from exp(log Gamma) chains: allow 64 ulp each.
  abs_err += 64.0 * kDoubleEps * abs_scale;
  const double rel = mag > 0.0 ? abs_err / mag : std::numeric_limits<double>::infinity();
  return {total, std::max(kDoubleEps, rel)};
}

void validate(const Hyp2F1Request& r) {
  if (!std::isfinite(r.alpha) || !std::isfinite(r.beta) || !std::isfinite(r.gamma_param) ||
      !std::isfinite(r.argument.real()) || !std::isfinite(r.argument.imag())) {
    throw DomainError("hyp2f1: non-finite input");
  }
  if (is_exact_nonpositive_integer(r.gamma_param)) {
    throw DomainError("hyp2f1: gamma parameter is a nonpositive integer");
  }
}

bool trivially_one(const Hyp2F1Request& r) { return r.alpha == 0.0 || r.beta == 0.0 || r.argument == 0.0; }

bool terminating(const Hyp2F1Request& r) {
  return is_exact_nonpositive_integer(r.alpha) || is_exact_nonpositive_integer(r.beta);
}

bool on_cut(std::complex<double> x) { return x.imag() == 0.0 && x.real() >= 1.0; }

double mapped_modulus(Hyp2F1Route route, std::complex<double> x) {
  switch (route) {
    case Hyp2F1Route::Direct: return std::abs(x);
    case Hyp2F1Route::Pfaff: return std::abs(x / (x - 1.0));
    case Hyp2F1Route::OneMinus: return std::abs(1.0 - x);
    case Hyp2F1Route::Inverse: return 1.0 / std::abs(x);
    case Hyp2F1Route::InverseOneMinus: return 1.0 / std::abs(1.0 - x);
    case Hyp2F1Route::OneMinusInverse: return std::abs(1.0 - 1.0 / x);
  }
  return std::numeric_limits<double>::infinity();
}

bool route_available(Hyp2F1Route route, const Hyp2F1Request& r) {
  const double a = r.alpha, b = r.beta, c = r.gamma_param;
  switch (route) {
    case Hyp2F1Route::Direct:
    case Hyp2F1Route::Pfaff: return true;
    case Hyp2F1Route::OneMinus:
    case Hyp2F1Route::OneMinusInverse: return !near_integer(c - a - b);
    case Hyp2F1Route::Inverse:
    case Hyp2F1Route::InverseOneMinus: return !near_integer(b - a);
  }
  return false;
}

Hyp2F1Result evaluate_route(const Hyp2F1Request& r, Hyp2F1Route route) {
  const double a = r.alpha, b = r.beta, c = r.gamma_param;
  const std::complex<double> x = r.argument;
  const double cab = c - a - b;
  switch (route) {
    case Hyp2F1Route::Direct:
      return finish(gauss_series(a, b, c, x), std::abs(x), "direct");

    case Hyp2F1Route::Pfaff: {
      const std::complex<double> w = x / (x - 1.0);
      const auto s = finish(gauss_series(a, c - b, c, w), std::abs(w), "pfaff");
      return {std::pow(1.0 - x, -a) * s.value, s.error_estimate + 4.0 * kDoubleEps};
    }

    case Hyp2F1Route::OneMinus: {
      const std::complex<double> w = 1.0 - x;
      return combine({Term{gamma_quotient(c, cab, c - a, c - b), 1.0, a, b, 1.0 - cab},
                      Term{gamma_quotient(c, -cab, a, b), std::pow(w, cab), c - a, c - b, 1.0 + cab}},
                     w, "1-x");
    }

    case Hyp2F1Route::Inverse: {
      const std::complex<double> w = 1.0 / x;
      const std::complex<double> mx = -x;
      return combine({Term{gamma_quotient(c, b - a, b, c - a), std::pow(mx, -a), a, a - c + 1.0, a - b + 1.0},
                      Term{gamma_quotient(c, a - b, a, c - b), std::pow(mx, -b), b, b - c + 1.0, b - a + 1.0}},
                     w, "1/x");
    }

    case Hyp2F1Route::InverseOneMinus: {
      const std::complex<double> omx = 1.0 - x;
      const std::complex<double> w = 1.0 / omx;
      return combine({Term{gamma_quotient(c, b - a, b, c - a), std::pow(omx, -a), a, c - b, a - b + 1.0},
                      Term{gamma_quotient(c, a - b, a, c - b), std::pow(omx, -b), b, c - a, b - a + 1.0}},
                     w, "1/(1-x)");
    }

    case Hyp2F1Route::OneMinusInverse: {
      const std::complex<double> w = 1.0 - 1.0 / x;
      return combine({Term{gamma_quotient(c, cab, c - a, c - b), std::pow(x, -a), a, a - c + 1.0, 1.0 - cab},
                      Term{gamma_quotient(c, -cab, a, b), std::pow(1.0 - x, cab) * std::pow(x, a - c), c - a,
                           1.0 - a, 1.0 + cab}},
                     w, "1-1/x");
    }
  }
  throw UnsupportedRegion("hyp2f1: unknown route");
}

constexpr std::array<Hyp2F1Route, 6> kRoutes = {Hyp2F1Route::Direct,   Hyp2F1Route::Pfaff,
                                                Hyp2F1Route::OneMinus, Hyp2F1Route::Inverse,
                                                Hyp2F1Route::InverseOneMinus, Hyp2F1Route::OneMinusInverse};

}  // namespace

Hyp2F1Result hyp2f1_series(const Hyp2F1Request& r) {
  validate(r);
  if (trivially_one(r)) return {1.0, kDoubleEps};
  if (!terminating(r) && std::abs(r.argument) >= 1.0) {
    throw UnsupportedRegion("hyp2f1_series: |x| >= 1");
  }
  return evaluate_route(r, Hyp2F1Route::Direct);
}

Hyp2F1Route hyp2f1_route(const Hyp2F1Request& r) {
  const auto x = r.argument;
  if (std::abs(x) <= kDirectRadius) return Hyp2F1Route::Direct;
  Hyp2F1Route best = Hyp2F1Route::Direct;
  double best_modulus = std::numeric_limits<double>::infinity();
  for (auto route : kRoutes) {
    if (!route_available(route, r)) continue;
    const double m = mapped_modulus(route, x);
    if (m < best_modulus) {
      best_modulus = m;
      best = route;
    }
  }
  if (best_modulus < kSupportedRadius) return best;
  if (std::abs(x) < 1.0) return Hyp2F1Route::Direct;
  throw UnsupportedRegion("hyp2f1: no convergent expansion near x = (" + std::to_string(x.real()) + ", " +
                          std::to_string(x.imag()) + ")");
}

Hyp2F1Result hyp2f1_via(const Hyp2F1Request& r, Hyp2F1Route route) {
  validate(r);
  if (on_cut(r.argument)) throw UnsupportedRegion("hyp2f1: argument on the branch cut [1, inf)");
  if (!route_available(route, r)) throw UnsupportedRegion("hyp2f1: route unavailable for these parameters");
  if (mapped_modulus(route, r.argument) >= 1.0) throw UnsupportedRegion("hyp2f1: mapped argument outside unit disk");
  return evaluate_route(r, route);
}

Hyp2F1Result hyp2f1(const Hyp2F1Request& r) {
  validate(r);
  if (trivially_one(r)) return {1.0, kDoubleEps};
  if (terminating(r)) return evaluate_route(r, Hyp2F1Route::Direct);

  const auto x = r.argument;
  if (x == 1.0) {
    // Gauss summation at the boundary point.
    const double cab = r.gamma_param - r.alpha - r.beta;
    if (!(cab > 0.0)) throw UnsupportedRegion("hyp2f1: divergent at x = 1 (requires gamma - alpha - beta > 0)");
    return {gamma_quotient(r.gamma_param, cab, r.gamma_param - r.alpha, r.gamma_param - r.beta), 64.0 * kDoubleEps};
  }
  if (on_cut(x)) throw UnsupportedRegion("hyp2f1: argument on the branch cut [1, inf)");
  return evaluate_route(r, hyp2f1_route(r));
}

std::complex<double> hyp2f1(double alpha, double beta, double gamma_param, std::complex<double> x) {
  return hyp2f1(Hyp2F1Request{alpha, beta, gamma_param, x}).value;
}

double hyp2f1(double alpha, double beta, double gamma_param, double x) {
  return hyp2f1(Hyp2F1Request{alpha, beta, gamma_param, {x, 0.0}}).value.real();
}

}  // namespace bje
