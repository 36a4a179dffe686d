#pragma once

#include <string_view>

#include "bje/tridiagonal.hpp"

namespace bje {

/// Parameter triple (a, b, c) of the associated Jacobi models. The weight
/// exponents satisfy a, b > -1; c is the association shift.
class JacobiParams {
 public:
  JacobiParams(double a, double b, double c = 0.0);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  /// a + b + 1.
  double gamma() const noexcept { return gamma_; }

  /// Same (a, b) with the association shift replaced.
  JacobiParams with_c(double c) const { return {a_, b_, c}; }

  friend bool operator==(const JacobiParams&, const JacobiParams&) = default;

 private:
  double a_;
  double b_;
  double c_;
  double gamma_;
};

enum class ModelKind { ClassicalJacobi, AssocI, AssocII, AssocIII };

std::string_view to_string(ModelKind kind) noexcept;
/// Accepts "jacobi", "I", "II", "III" (case-insensitive, "assoc" prefix optional).
ModelKind parse_model_kind(std::string_view name);

/// Throws DomainError unless `p` satisfies the constraints of `kind`:
///   ClassicalJacobi: c == 0.
///   AssocI:  c >= 0 and, for c > 0, c + a > 0 and c + b > 0.
///   AssocII: c >= 0.
///   AssocIII: c + 1 > 0, c + a + 1 > 0, c + b + 1 > 0.
void validate_model(ModelKind kind, const JacobiParams& p);

/// (c+a+1) / (2c+a+b+2), the first diagonal entry of the Model III matrix.
double lambda_hat0(const JacobiParams& p);

/// (n+c+a+1)/(2n+2c+a+b+2) * (n+c+a+b+1)/(2n+2c+a+b+1), n >= 0.
double lambda_n(const JacobiParams& p, int n);

/// (n+c)/(2n+2c+a+b+1) * (n+c+b)/(2n+2c+a+b), n >= 0. Exactly 0 when n+c == 0.
double mu_n(const JacobiParams& p, int n);

/// Leading size x size block of the Jacobi matrix of the given model.
SymmetricTridiagonal tridiag_entries(ModelKind kind, const JacobiParams& p, int size);

}  // namespace bje
