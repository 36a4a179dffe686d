#include "commands.hpp"

#include <cmath>
#include <ostream>

#include <json.hpp>

#include "bje/analytic.hpp"
#include "bje/dynamics.hpp"
#include "bje/ensemble.hpp"
#include "bje/error.hpp"
#include "bje/spectral.hpp"
#include "bje/verify/verify.hpp"

namespace bje::cli {

std::string version_string() { return std::string("bje ") + BJE_VERSION + " (g" + BJE_GIT_REVISION + ")"; }

namespace {

Table base_table(const RunConfig& cfg) {
  Table t;
  t.add_meta("version", version_string());
  t.add_meta("command", cfg.command);
  return t;
}

void add_abc(Table& t, const RunConfig& cfg) {
  t.add_meta("a", cfg.a);
  t.add_meta("b", cfg.b);
  t.add_meta("c", cfg.c);
}

double effective_beta(const RunConfig& cfg) {
  if (cfg.beta) return *cfg.beta;
  return 2.0 * cfg.c / cfg.n;
}

}  // namespace

Table cmd_sample(const RunConfig& cfg) {
  const double beta = effective_beta(cfg);
  if (!(beta > 0.0)) throw DomainError("sample: beta = 2c/N must be positive; pass --beta when c = 0");
  const EnsembleConfig ens(cfg.n, beta, cfg.a, cfg.b);
  MonteCarloOptions opt;
  opt.seed = cfg.seed;
  opt.threads = cfg.threads;
  const auto values = sample_eigenvalues(ens, cfg.trials, opt);

  Table t = base_table(cfg);
  add_abc(t, cfg);
  t.add_meta("n", std::to_string(cfg.n));
  t.add_meta("beta", beta);
  t.add_meta("trials", std::to_string(cfg.trials));
  t.add_meta("seed", std::to_string(cfg.seed));
  t.add_meta("bins", std::to_string(cfg.bins));
  if (cfg.bins <= 0) {
    t.columns = {"trial", "index", "lambda"};
    const auto n = static_cast<std::size_t>(cfg.n);
    for (std::size_t i = 0; i < values.size(); ++i) {
      t.rows.push_back({static_cast<long long>(i / n), static_cast<long long>(i % n), values[i]});
    }
    return t;
  }
  std::vector<long long> counts(static_cast<std::size_t>(cfg.bins), 0);
  for (double x : values) {
    auto bin = static_cast<std::size_t>(x * cfg.bins);
    if (bin >= counts.size()) bin = counts.size() - 1;
    ++counts[bin];
  }
  const JacobiParams p(cfg.a, cfg.b, cfg.c);
  const bool closed = density_III_defined(p);
  t.add_meta("limit_density", closed ? "closed form" : "Stieltjes inversion");
  t.columns = {"lo", "hi", "count", "density", "limit_density"};
  const double width = 1.0 / cfg.bins;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double lo = static_cast<double>(i) * width, hi = lo + width, mid = lo + 0.5 * width;
    const double limit = closed ? density_III(p, mid) : density_numeric(ModelKind::AssocIII, p, mid, cfg.eps);
    t.rows.push_back({lo, hi, counts[i], static_cast<double>(counts[i]) / (static_cast<double>(values.size()) * width), limit});
  }
  return t;
}

Table cmd_density(const RunConfig& cfg) {
  if (cfg.grid < 2) throw DomainError("density: grid must be >= 2");
  const JacobiParams p(cfg.a, cfg.b, cfg.c);
  const ModelKind kind = parse_model_kind(cfg.model);
  validate_model(kind, p);
  const bool closed = kind == ModelKind::AssocIII && density_III_defined(p);
  Table t = base_table(cfg);
  t.add_meta("model", std::string(to_string(kind)));
  add_abc(t, cfg);
  t.add_meta("grid", std::to_string(cfg.grid));
  if (closed) {
    t.add_meta("method", "closed form");
  } else {
    t.add_meta("method", "Stieltjes inversion");
    t.add_meta("eps", cfg.eps);
    t.add_meta("note", "closed form unavailable for these parameters (integer a, or model other than III, or sign "
                       "conditions); values are Im S(x + i eps) / pi");
  }
  t.columns = {"x", "density", "method"};
  for (int i = 0; i < cfg.grid; ++i) {
    const double x = static_cast<double>(i) / (cfg.grid - 1);
    const bool endpoint = i == 0 || i == cfg.grid - 1;
    const double exponent = i == 0 ? p.a() : p.b();
    if (closed && endpoint && exponent != 0.0) {
      t.rows.push_back({x, exponent > 0.0 ? 0.0 : INFINITY, std::string("limit")});
    } else if (closed && !endpoint) {
      t.rows.push_back({x, density_III(p, x), std::string("closed")});
    } else {
      t.rows.push_back({x, density_numeric(kind, p, x, cfg.eps), std::string("inversion")});
    }
  }
  return t;
}

Table cmd_stieltjes(const RunConfig& cfg) {
  if (cfg.grid < 2) throw DomainError("stieltjes: grid must be >= 2");
  if (cfg.im == 0.0) throw DomainError("stieltjes: --im must be nonzero");
  const JacobiParams p(cfg.a, cfg.b, cfg.c);
  const ModelKind kind = parse_model_kind(cfg.model);
  validate_model(kind, p);
  Table t = base_table(cfg);
  t.add_meta("model", std::string(to_string(kind)));
  add_abc(t, cfg);
  t.add_meta("im", cfg.im);
  t.columns = {"re", "im", "S_re", "S_im", "method"};
  for (int i = 0; i < cfg.grid; ++i) {
    const double re = cfg.re_min + (cfg.re_max - cfg.re_min) * i / (cfg.grid - 1);
    const std::complex<double> z(re, cfg.im);
    std::complex<double> s;
    std::string method = "closed";
    try {
      s = stieltjes_closed(kind, p, z);
    } catch (const UnsupportedRegion&) {
      s = stieltjes_cf(kind, p, z, 400, CfTail::Asymptotic).value;
      method = "continued fraction";
    }
    t.rows.push_back({re, cfg.im, s.real(), s.imag(), method});
  }
  return t;
}

Table cmd_moments(const RunConfig& cfg) {
  if (cfg.k_max < 0) throw DomainError("moments: k-max must be >= 0");
  const JacobiParams p(cfg.a, cfg.b, cfg.c);
  validate_model(ModelKind::AssocIII, p);
  const auto m = moments11(ModelKind::AssocIII, p, cfg.k_max);
  const auto u = stationary_uk(p, cfg.k_max);
  Table t = base_table(cfg);
  add_abc(t, cfg);
  t.add_meta("k_max", std::to_string(cfg.k_max));
  t.columns = {"k", "moment11", "u_k", "abs_diff"};
  for (std::size_t k = 0; k < m.size(); ++k) {
    t.rows.push_back({static_cast<long long>(k), m[k], u[k], std::abs(m[k] - u[k])});
  }
  return t;
}

Table cmd_dynamics(const RunConfig& cfg) {
  if (cfg.k_max < 1) throw DomainError("dynamics: k-max must be >= 1");
  if (!(cfg.init_lo <= cfg.init_hi) || cfg.init_lo < 0.0 || cfg.init_hi > 1.0) {
    throw DomainError("dynamics: need 0 <= init-lo <= init-hi <= 1");
  }
  const JacobiParams p(cfg.a, cfg.b, cfg.c);
  ParticleState init;
  for (int i = 0; i < cfg.n; ++i) {
    const double s = cfg.n == 1 ? 0.5 : static_cast<double>(i) / (cfg.n - 1);
    init.lambda.push_back(cfg.init_lo + (cfg.init_hi - cfg.init_lo) * s);
  }
  MomentVector m0;
  if (cfg.init_lo == cfg.init_hi) {
    std::vector<double> point(static_cast<std::size_t>(cfg.k_max) + 1);
    for (std::size_t k = 0; k < point.size(); ++k) point[k] = std::pow(cfg.init_lo, static_cast<double>(k));
    m0 = MomentVector(std::move(point));
  } else {
    m0 = empirical_moments(init.lambda, cfg.k_max);
  }
  const auto ode = integrate_moments(m0, p, cfg.t_end, cfg.dt, cfg.records);
  const auto u = stationary_uk(p, cfg.k_max);

  std::optional<SimulatedMoments> sde;
  double beta = 0.0;
  if (cfg.sde_paths > 0) {
    beta = cfg.beta ? *cfg.beta : DynamicsParams::from_c(cfg.n, cfg.c, cfg.a, cfg.b).beta;
    if (beta > 0.0 && cfg.n > 1 && cfg.init_lo == cfg.init_hi) {
      throw DomainError("dynamics: interacting particles need distinct starting points; set --init-lo < --init-hi");
    }
    SimulationOptions opt;
    opt.seed = cfg.seed;
    opt.threads = cfg.threads;
    opt.records = cfg.records;
    sde = simulate_moments(DynamicsParams(cfg.a, cfg.b, beta), init, cfg.t_end, cfg.sde_dt, cfg.sde_paths, cfg.k_max,
                           opt);
  }

  Table t = base_table(cfg);
  add_abc(t, cfg);
  t.add_meta("k_max", std::to_string(cfg.k_max));
  t.add_meta("t_end", cfg.t_end);
  t.add_meta("dt", cfg.dt);
  t.add_meta("records", std::to_string(cfg.records));
  t.add_meta("init", "equispaced on [" + format_double(cfg.init_lo) + ", " + format_double(cfg.init_hi) + "]");
  t.add_meta("ode_error_per_unit_time", ode.error_per_unit_time);
  if (sde) {
    t.add_meta("n", std::to_string(cfg.n));
    t.add_meta("beta", beta);
    t.add_meta("sde_dt", cfg.sde_dt);
    t.add_meta("sde_paths", std::to_string(cfg.sde_paths));
    t.add_meta("sde_failures", std::to_string(sde->failures));
    t.add_meta("seed", std::to_string(cfg.seed));
  }
  t.columns = {"t"};
  const int kmax = cfg.k_max;
  for (int k = 0; k <= kmax; ++k) t.columns.push_back("m" + std::to_string(k));
  for (int k = 0; k <= kmax; ++k) t.columns.push_back("u" + std::to_string(k));
  if (sde) {
    for (int k = 0; k <= kmax; ++k) t.columns.push_back("sde_m" + std::to_string(k));
    for (int k = 0; k <= kmax; ++k) t.columns.push_back("sde_se" + std::to_string(k));
  }
  for (std::size_t r = 0; r < ode.path.times.size(); ++r) {
    std::vector<Cell> row{ode.path.times[r]};
    for (double v : ode.path.moments[r].values()) row.emplace_back(v);
    for (double v : u.values()) row.emplace_back(v);
    if (sde) {
      for (double v : sde->mean.moments[r].values()) row.emplace_back(v);
      for (double v : sde->standard_error.moments[r].values()) row.emplace_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

bool cmd_verify(const RunConfig& cfg, std::ostream& report, std::ostream& log) {
  verify::Options opt;
  opt.seed = cfg.seed;
  opt.threads = cfg.threads;
  opt.tolerance_scale = cfg.tolerance_scale;
  opt.enforce_budget = cfg.enforce_budget;
  const auto results = verify::run(cfg.only, opt);

  nlohmann::ordered_json doc;
  doc["meta"] = {{"version", version_string()},
                 {"command", "verify"},
                 {"seed", cfg.seed},
                 {"tolerance_scale", cfg.tolerance_scale},
                 {"enforce_budget", cfg.enforce_budget}};
  doc["data"] = nlohmann::ordered_json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"label", c.label},
                        {"measured", std::isfinite(c.measured) ? nlohmann::ordered_json(c.measured) : nullptr},
                        {"tolerance", c.tolerance},
                        {"verdict", c.passed ? "pass" : "fail"}});
    }
    const double worst = r.worst_ratio();
    doc["data"].push_back({{"criterion", r.name},
                           {"summary", r.summary},
                           {"measured", std::isfinite(worst) ? nlohmann::ordered_json(worst) : nullptr},
                           {"tolerance", 1.0},
                           {"metric", "max measured/tolerance over checks"},
                           {"verdict", r.passed ? "pass" : "fail"},
                           {"seconds", r.seconds},
                           {"budget_seconds", r.budget_seconds},
                           {"checks", std::move(checks)}});
    log << (r.passed ? "PASS " : "FAIL ") << r.name << "  worst ratio " << format_double(worst) << "  "
        << format_double(r.seconds) << " s\n";
  }
  report << doc.dump(2) << '\n';
  return all;
}

}  // namespace bje::cli
