#pragma once

#include <vector>

#include "bje/tridiagonal.hpp"

namespace bje {

struct EigenResult {
  std::vector<double> values;            ///< ascending
  std::vector<double> first_components;  ///< first entry of each unit eigenvector, if requested
};

struct EigenSystem {
  std::vector<double> values;               ///< ascending
  std::vector<std::vector<double>> vectors; ///< vectors[j] is the unit eigenvector of values[j]
};

/// Implicit-shift QL with Wilkinson shifts. Deflates when
/// |e_i| <= eps * (|d_i| + |d_{i+1}|); throws ConvergenceError after 30
/// sweeps on a single eigenvalue.
EigenResult eigen_tridiagonal(const SymmetricTridiagonal& t, bool want_first_components);

/// Same iteration with full eigenvector accumulation, O(M^2) memory.
EigenSystem eigen_tridiagonal_full(const SymmetricTridiagonal& t);

}  // namespace bje
