#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace bje {

/// Philox4x32-10 counter-based block function.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key) noexcept;

/// Deterministic random stream keyed by (seed, stream). Distinct streams are
/// statistically independent, so Monte Carlo trial i can use stream i and
/// produce the same numbers regardless of which thread runs it.
/// Satisfies UniformRandomBitGenerator.
class Rng {
 public:
  using result_type = std::uint32_t;

  explicit Rng(std::uint64_t seed = 0, std::uint64_t stream = 0) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }
  result_type operator()() noexcept;

  std::uint64_t next_u64() noexcept;
  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform() noexcept;
  /// Standard normal (Box-Muller, both outputs used).
  double normal() noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

 private:
  void refill() noexcept;

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int used_ = 4;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

/// log of a Gamma(shape, 1) variate; stays finite for tiny shapes where the
/// variate itself underflows.
double sample_log_gamma(double shape, Rng& rng);

double sample_gamma(double shape, Rng& rng);

/// Beta(alpha, beta_shape) as X / (X + Y) with independent gamma variates,
/// computed from their logarithms. Throws DomainError unless both shapes > 0.
double sample_beta(double alpha, double beta_shape, Rng& rng);

}  // namespace bje
