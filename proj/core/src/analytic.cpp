#include "bje/analytic.hpp"

#include <cmath>
#include <numbers>

#include "bje/error.hpp"
#include "bje/gamma.hpp"
#include "bje/hypergeom.hpp"

namespace bje {
namespace {

void require_off_support(std::complex<double> z) {
  if (z.imag() == 0.0 && z.real() >= 0.0 && z.real() <= 1.0) {
    throw DomainError("Stieltjes transform requested on the support [0, 1]");
  }
}

void require_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x < 1.0)) throw DomainError(std::string(what) + ": x must lie in [0, 1)");
}

void require_noninteger_a(const JacobiParams& p, const char* what) {
  if (p.a() == std::nearbyint(p.a())) {
    throw DomainError(std::string(what) + ": a must not be an integer (use density_numeric)");
  }
}

}  // namespace

std::complex<double> stieltjes_closed(ModelKind kind, const JacobiParams& p, std::complex<double> z) {
  require_off_support(z);
  if (kind == ModelKind::ClassicalJacobi) kind = ModelKind::AssocI;
  validate_model(kind, p);
  const double a = p.a(), b = p.b(), c = p.c();
  const std::complex<double> x = 1.0 / z;

  const auto numerator = hyp2f1(Hyp2F1Request{c + 1, c + a + 1, 2 * c + a + b + 2, x});
  Hyp2F1Request den{c, c + a + 1, 2 * c + a + b + 2, x};
  switch (kind) {
    case ModelKind::AssocI: den = {c, c + a, 2 * c + a + b, x}; break;
    case ModelKind::AssocII: den = {c, c + a + 1, 2 * c + a + b + 1, x}; break;
    default: break;
  }
  const auto denominator = hyp2f1(den);
  return -numerator.value / (z * denominator.value);
}

std::complex<double> stieltjes_transform(ModelKind kind, const JacobiParams& p, std::complex<double> z,
                                         int cf_depth) {
  try {
    return stieltjes_closed(kind, p, z);
  } catch (const UnsupportedRegion&) {
    return stieltjes_cf(kind, p, z, cf_depth).value;
  }
}

double U_of_x(const JacobiParams& p, double x) {
  require_noninteger_a(p, "U_of_x");
  require_unit_interval(x, "U_of_x");
  const double a = p.a(), b = p.b(), c = p.c();
  const SignedLog g = ln_gamma(c + 1) * ln_gamma(a + 1) / ln_gamma(1 + c + a);
  return g.value() * hyp2f1(c, -c - a - b - 1, -a, x);
}

double V_of_x(const JacobiParams& p, double x) {
  require_noninteger_a(p, "V_of_x");
  require_unit_interval(x, "V_of_x");
  const double a = p.a(), b = p.b(), c = p.c();
  if (c == 0.0 || x == 0.0) return 0.0;
  const SignedLog g = ln_gamma(c + a + b + 2) / (ln_gamma(1 + c + b) * ln_gamma(2 + a));
  const double constant = -std::numbers::pi * c * g.value() / std::sin(std::numbers::pi * a);
  return constant * std::pow(1 - x, 1 + b) * std::pow(x, 1 + a) * hyp2f1(1 - c, 2 + c + a + b, 2 + a, x);
}

double density_constant(const JacobiParams& p) {
  const double a = p.a(), b = p.b(), c = p.c();
  return (ln_gamma(c + 1) * ln_gamma(c + a + b + 2) / (ln_gamma(c + a + 1) * ln_gamma(c + b + 1))).value();
}

bool density_III_defined(const JacobiParams& p) {
  const double a = p.a(), b = p.b(), c = p.c();
  if (a == std::nearbyint(a)) return false;
  return c == 0.0 || (c > 0.0 && c + a > 0.0 && c + b > 0.0);
}

double density_III(const JacobiParams& p, double x) {
  if (!density_III_defined(p)) {
    throw DomainError("density_III: requires non-integer a and c = 0 or (c > 0, c+a > 0, c+b > 0); "
                      "use density_numeric");
  }
  if (!(x > 0.0 && x < 1.0)) throw DomainError("density_III: x must lie in (0, 1)");
  const double a = p.a(), b = p.b();
  const double u = U_of_x(p, x);
  const double v = V_of_x(p, x);
  const double modulus2 = u * u + 2.0 * u * v * std::cos(std::numbers::pi * a) + v * v;
  return density_constant(p) * std::pow(x, a) * std::pow(1 - x, b) / modulus2;
}

DensityProfile density_profile(const JacobiParams& p, int n) {
  if (n < 1) throw DomainError("density_profile: grid must have at least one point");
  DensityProfile profile{p, {}, {}};
  profile.grid.reserve(static_cast<std::size_t>(n));
  profile.values.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const double x = static_cast<double>(i) / (n + 1);
    profile.grid.push_back(x);
    profile.values.push_back(density_III(p, x));
  }
  return profile;
}

double density_numeric(ModelKind kind, const JacobiParams& p, double x, double eps,
                       const NumericDensityOptions& options) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("density_numeric: x must lie in (0, 1)");
  if (!(eps >= 1e-8 && eps <= 1e-3)) throw DomainError("density_numeric: eps must lie in [1e-8, 1e-3]");
  const auto t = tridiag_entries(kind, p, options.depth);
  auto at = [&](double e) { return stieltjes_cf(t, {x, e}, CfTail::Asymptotic).imag() / std::numbers::pi; };
  if (!options.richardson) return at(eps);
  return 2.0 * at(0.5 * eps) - at(eps);
}

}  // namespace bje
