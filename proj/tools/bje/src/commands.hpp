#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "table.hpp"

namespace bje::cli {

/// Seed used when neither --seed nor BJE_SEED is given.
inline constexpr std::uint64_t kDefaultSeed = 20240611;

std::string version_string();

struct RunConfig {
  std::string command;
  double a = 0.5;
  double b = 0.5;
  double c = 1.0;
  std::optional<double> beta;
  std::string model = "III";
  int n = 60;
  int k_max = 8;
  std::size_t trials = 100;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;
  int grid = 2001;
  int bins = 0;
  double t_end = 50.0;
  double dt = 1e-3;
  double sde_dt = 1e-4;
  int records = 50;
  std::size_t sde_paths = 0;
  double init_lo = 0.5;
  double init_hi = 0.5;
  double re_min = -1.0;
  double re_max = 2.0;
  double im = 0.25;
  double eps = 1e-6;
  std::vector<std::string> only;
  double tolerance_scale = 1.0;
  bool enforce_budget = true;
  std::string output_path;
  Format format = Format::Csv;
};

Table cmd_sample(const RunConfig& cfg);
Table cmd_density(const RunConfig& cfg);
Table cmd_stieltjes(const RunConfig& cfg);
Table cmd_moments(const RunConfig& cfg);
Table cmd_dynamics(const RunConfig& cfg);

/// Writes the JSON report and returns true iff every criterion passed.
bool cmd_verify(const RunConfig& cfg, std::ostream& report, std::ostream& log);

}  // namespace bje::cli
