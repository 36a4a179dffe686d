#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bje/error.hpp"
#include "commands.hpp"

namespace {

using bje::cli::RunConfig;

void abc_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--a", cfg.a, "weight exponent a > -1")->capture_default_str();
  sub->add_option("--b", cfg.b, "weight exponent b > -1")->capture_default_str();
  sub->add_option("--c", cfg.c, "association parameter c")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Beta Jacobi ensembles and associated Jacobi measures"};
  app.set_version_flag("--version", bje::cli::version_string());
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "csv";
  app.add_option("--seed", cfg.seed, "random seed")->envname("BJE_SEED")->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads (0 = hardware concurrency)")->envname("BJE_THREADS");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("-o,--output", cfg.output_path, "output file (default stdout)");

  auto* sample = app.add_subcommand("sample", "eigenvalues of the tridiagonal model");
  abc_options(sample, cfg);
  sample->add_option("--n", cfg.n, "matrix size N")->capture_default_str();
  sample->add_option("--beta", cfg.beta, "override beta = 2c/N");
  sample->add_option("--trials", cfg.trials, "independent matrices")->capture_default_str();
  sample->add_option("--bins", cfg.bins, "histogram bins (0 = raw eigenvalues)")->capture_default_str();

  auto* density = app.add_subcommand("density", "density of the limit measure on a uniform grid");
  abc_options(density, cfg);
  density->add_option("--model", cfg.model, "jacobi, I, II or III")->capture_default_str();
  density->add_option("--grid", cfg.grid, "grid points on [0, 1]")->capture_default_str();
  density->add_option("--eps", cfg.eps, "imaginary offset for Stieltjes inversion")->capture_default_str();

  auto* stieltjes = app.add_subcommand("stieltjes", "Stieltjes transform along a horizontal line");
  abc_options(stieltjes, cfg);
  stieltjes->add_option("--model", cfg.model, "jacobi, I, II or III")->capture_default_str();
  stieltjes->add_option("--grid", cfg.grid, "points on the line")->capture_default_str();
  stieltjes->add_option("--re-min", cfg.re_min)->capture_default_str();
  stieltjes->add_option("--re-max", cfg.re_max)->capture_default_str();
  stieltjes->add_option("--im", cfg.im, "imaginary part of z")->capture_default_str();

  auto* moments = app.add_subcommand("moments", "operator moments next to the stationary recursion");
  abc_options(moments, cfg);
  moments->add_option("--k-max", cfg.k_max)->capture_default_str();

  auto* dynamics = app.add_subcommand("dynamics", "moment ODE with optional particle simulation overlay");
  abc_options(dynamics, cfg);
  dynamics->add_option("--k-max", cfg.k_max)->capture_default_str();
  dynamics->add_option("--t-end", cfg.t_end)->capture_default_str();
  dynamics->add_option("--dt", cfg.dt, "ODE step")->capture_default_str();
  dynamics->add_option("--records", cfg.records, "recording intervals")->capture_default_str();
  dynamics->add_option("--n", cfg.n, "particles N")->capture_default_str();
  dynamics->add_option("--beta", cfg.beta, "override beta = 2c/N");
  dynamics->add_option("--sde-paths", cfg.sde_paths, "simulated paths (0 = ODE only)")->capture_default_str();
  dynamics->add_option("--sde-dt", cfg.sde_dt, "Euler-Maruyama step")->capture_default_str();
  dynamics->add_option("--init-lo", cfg.init_lo, "lowest starting particle")->capture_default_str();
  dynamics->add_option("--init-hi", cfg.init_hi, "highest starting particle")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  verify->add_option("--only", cfg.only, "criterion names (repeatable or comma separated)")->delimiter(',');
  verify->add_option("--tolerance-scale", cfg.tolerance_scale, "multiply every tolerance")->capture_default_str();
  verify->add_flag("!--no-budget", cfg.enforce_budget, "ignore wall-clock budgets");

  CLI11_PARSE(app, argc, argv);
  cfg.format = format == "json" ? bje::cli::Format::Json : bje::cli::Format::Csv;
  cfg.command = app.get_subcommands().front()->get_name();

  std::ofstream file;
  if (!cfg.output_path.empty()) {
    file.open(cfg.output_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << cfg.output_path << '\n';
      return 3;
    }
  }
  std::ostream& out = cfg.output_path.empty() ? std::cout : file;

  try {
    if (cfg.command == "verify") {
      const bool ok = bje::cli::cmd_verify(cfg, out, std::cerr);
      return ok ? 0 : 1;
    }
    bje::cli::Table table;
    if (cfg.command == "sample") table = bje::cli::cmd_sample(cfg);
    else if (cfg.command == "density") table = bje::cli::cmd_density(cfg);
    else if (cfg.command == "stieltjes") table = bje::cli::cmd_stieltjes(cfg);
    else if (cfg.command == "moments") table = bje::cli::cmd_moments(cfg);
    else table = bje::cli::cmd_dynamics(cfg);
    bje::cli::write_table(out, table, cfg.format);
  } catch (const bje::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  out.flush();
  if (!out) {
    std::cerr << "error: write failed\n";
    return 3;
  }
  return 0;
}
