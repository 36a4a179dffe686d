#include "bje/coeffs.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <vector>

#include "bje/error.hpp"

namespace bje {

JacobiParams::JacobiParams(double a, double b, double c) : a_(a), b_(b), c_(c), gamma_(a + b + 1.0) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw DomainError("JacobiParams: parameters must be finite");
  }
  if (!(a > -1.0) || !(b > -1.0)) {
    throw DomainError("JacobiParams: require a > -1 and b > -1");
  }
}

std::string_view to_string(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::ClassicalJacobi: return "jacobi";
    case ModelKind::AssocI: return "I";
    case ModelKind::AssocII: return "II";
    case ModelKind::AssocIII: return "III";
  }
  return "?";
}

ModelKind parse_model_kind(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (s.starts_with("assoc")) s.erase(0, 5);
  if (s == "jacobi" || s == "classical") return ModelKind::ClassicalJacobi;
  if (s == "i" || s == "1") return ModelKind::AssocI;
  if (s == "ii" || s == "2") return ModelKind::AssocII;
  if (s == "iii" || s == "3") return ModelKind::AssocIII;
  throw DomainError("unknown model kind '" + std::string(name) + "'");
}

void validate_model(ModelKind kind, const JacobiParams& p) {
  const double a = p.a(), b = p.b(), c = p.c();
  switch (kind) {
    case ModelKind::ClassicalJacobi:
      if (c != 0.0) throw DomainError("ClassicalJacobi requires c == 0");
      return;
    case ModelKind::AssocI:
      // c == 0 is the classical Jacobi matrix, defined for all a, b > -1.
      if (c < 0.0 || (c > 0.0 && (c + a <= 0.0 || c + b <= 0.0))) {
        throw DomainError("Model I requires c >= 0, c + a > 0, c + b > 0");
      }
      return;
    case ModelKind::AssocII:
      if (c < 0.0) throw DomainError("Model II requires c >= 0");
      return;
    case ModelKind::AssocIII:
      if (c + 1.0 <= 0.0 || c + a + 1.0 <= 0.0 || c + b + 1.0 <= 0.0) {
        throw DomainError("Model III requires c + 1 > 0, c + a + 1 > 0, c + b + 1 > 0");
      }
      return;
  }
}

namespace {

double checked_ratio(double num, double den, const char* what) {
  if (den == 0.0) {
    if (num == 0.0) return 1.0;
    throw DomainError(std::string(what) + ": vanishing denominator");
  }
  return num / den;
}

}  // namespace

double lambda_hat0(const JacobiParams& p) {
  const double c = p.c(), a = p.a(), b = p.b();
  const double den = 2 * c + a + b + 2;
  if (!(den > 0.0)) throw DomainError("lambda_hat0: denominator must be positive");
  return (c + a + 1) / den;
}

double lambda_n(const JacobiParams& p, int n) {
  if (n < 0) throw DomainError("lambda_n: n must be nonnegative");
  const double a = p.a(), b = p.b();
  const double m = n + p.c();
  const double first = checked_ratio(m + a + 1, 2 * m + a + b + 2, "lambda_n");
  // At m == 0 the second factor is (a+b+1)/(a+b+1), identically 1.
  const double second = m == 0.0 ? 1.0 : checked_ratio(m + a + b + 1, 2 * m + a + b + 1, "lambda_n");
  return first * second;
}

double mu_n(const JacobiParams& p, int n) {
  if (n < 0) throw DomainError("mu_n: n must be nonnegative");
  const double a = p.a(), b = p.b();
  const double m = n + p.c();
  if (m == 0.0) return 0.0;
  return checked_ratio(m, 2 * m + a + b + 1, "mu_n") * checked_ratio(m + b, 2 * m + a + b, "mu_n");
}

SymmetricTridiagonal tridiag_entries(ModelKind kind, const JacobiParams& p, int size) {
  if (size < 1) throw DomainError("tridiag_entries: size must be >= 1");
  validate_model(kind, p);

  std::vector<double> d(static_cast<std::size_t>(size));
  std::vector<double> e(static_cast<std::size_t>(size - 1));

  double first = 0.0;
  double first_lambda = 0.0;
  switch (kind) {
    case ModelKind::AssocIII:
      first_lambda = lambda_hat0(p);
      first = first_lambda;
      break;
    case ModelKind::AssocII:
      first_lambda = lambda_n(p, 0);
      first = first_lambda;
      break;
    case ModelKind::AssocI:
    case ModelKind::ClassicalJacobi:
      first_lambda = lambda_n(p, 0);
      first = first_lambda + mu_n(p, 0);
      break;
  }
  d[0] = first;

  double lambda_prev = first_lambda;
  for (int n = 1; n < size; ++n) {
    const double lam = lambda_n(p, n);
    const double mu = mu_n(p, n);
    const double radicand = lambda_prev * mu;
    if (!(radicand >= 0.0)) throw DomainError("tridiag_entries: negative off-diagonal radicand");
    e[static_cast<std::size_t>(n - 1)] = std::sqrt(radicand);
    d[static_cast<std::size_t>(n)] = lam + mu;
    lambda_prev = lam;
  }
  return {std::move(d), std::move(e)};
}

}  // namespace bje
