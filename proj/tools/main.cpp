// Command-line front end: branch scans, single-point solves, parameter
// sweeps, the invariant verification suite and truncation-ladder oracle
// comparisons, all emitted as CSV.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "tprabi/checks.hpp"
#include "tprabi/csv.hpp"
#include "tprabi/sweep.hpp"
#include "tprabi/types.hpp"

namespace {

// "a:b:steps"
tprabi::GridSpec parse_range(const std::string& text) {
  tprabi::GridSpec grid;
  const auto first = text.find(':');
  const auto second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw tprabi::InvalidParameter("range must look like min:max:steps");
  try {
    grid.min = std::stod(text.substr(0, first));
    grid.max = std::stod(text.substr(first + 1, second - first - 1));
    grid.steps = std::stoi(text.substr(second + 1));
  } catch (const std::exception&) {
    throw tprabi::InvalidParameter("cannot parse range '" + text + "'");
  }
  return grid;
}

std::string resolve_out(const std::string& path) {
  if (path == "-" || path.empty()) return path;
  if (path.front() == '/') return path;
  if (const char* dir = std::getenv("TPRABI_OUT_DIR"))
    return std::string(dir) + "/" + path;
  return path;
}

int parse_branch(const std::string& text) {
  if (text == "auto") return 0;
  try {
    const int b = std::stoi(text);
    if (b >= 1 && b <= 4) return b;
  } catch (const std::exception&) {
  }
  throw tprabi::InvalidParameter("--branch takes 1..4 or 'auto'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-exact spectra of the asymmetric two-photon Rabi model"};
  app.require_subcommand(1);

  std::string out = "-";
  app.add_option("--out", out, "Output CSV path ('-' = stdout)")
      ->capture_default_str();

  double omega = 1.0, lambda = 0.2, epsilon = 0.0;
  double delta = 0.0;
  bool delta_set = false;
  int n = 0;
  std::string branch = "auto";
  std::string lambda_range, epsilon_range;
  double tol_residual = 1e-9, tol_oracle = 1e-6, tol_delta_match = 0.05;
  int seeds = 64;
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
  std::vector<int> truncations = {40, 80, 160};
  int threads = 0;

  auto add_model_flags = [&](CLI::App* cmd, bool with_delta) {
    cmd->add_option("--omega", omega, "Mode frequency")->capture_default_str();
    cmd->add_option("--lambda", lambda, "Two-photon coupling")
        ->capture_default_str();
    cmd->add_option("--epsilon", epsilon, "Bias strength")
        ->capture_default_str();
    if (with_delta)
      cmd->add_option("--delta", delta, "Fixed level splitting")
          ->each([&](const std::string&) { delta_set = true; });
  };

  CLI::App* scan = app.add_subcommand(
      "alpha-scan", "Gauge-exponent branch curves over a coupling-ratio grid");
  scan->add_option("--lambda-range", lambda_range, "Lambda grid min:max:steps")
      ->required();
  scan->add_option("--threads", threads, "Worker threads (0 = hardware)");

  CLI::App* solve = app.add_subcommand(
      "solve", "Full pipeline at one parameter point");
  add_model_flags(solve, true);
  solve->add_option("--n", n, "Level index (polynomial degree)")
      ->capture_default_str();
  solve->add_option("--branch", branch, "Gauge branch 1..4 or 'auto'")
      ->capture_default_str();
  solve->add_option("--tol-residual", tol_residual, "Verification threshold")
      ->capture_default_str();
  solve->add_option("--tol-oracle", tol_oracle, "Oracle match tolerance")
      ->capture_default_str();
  solve->add_option("--seeds", seeds, "Multi-start seed count")
      ->capture_default_str();
  solve->add_option("--seed", seed, "RNG seed for the multi-start solver");
  solve->add_option("--truncation", truncations,
                    "Truncation ladder for the oracle")
      ->capture_default_str();
  bool no_oracle = false;
  solve->add_flag("--no-oracle", no_oracle, "Skip the spectrum comparison");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Level surfaces over a (lambda, epsilon) grid");
  add_model_flags(sweep, true);
  sweep->add_option("--n", n, "Level index")->capture_default_str();
  sweep->add_option("--branch", branch, "Gauge branch 1..4 or 'auto'")
      ->capture_default_str();
  sweep->add_option("--lambda-range", lambda_range, "Lambda grid min:max:steps");
  sweep->add_option("--epsilon-range", epsilon_range,
                    "Epsilon grid min:max:steps");
  sweep->add_option("--tol-delta-match", tol_delta_match,
                    "Locus tolerance on delta^2 when --delta is fixed")
      ->capture_default_str();
  sweep->add_option("--seeds", seeds, "Multi-start seed count (n >= 2)");
  sweep->add_option("--seed", seed, "RNG seed for the multi-start solver");
  sweep->add_option("--threads", threads, "Worker threads (0 = hardware)");

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the invariant suite and report pass/fail per check");
  std::string only;
  double inject_fault = 0.0;
  verify->add_option("--only", only, "Run a single named check");
  verify->add_option("--inject-fault", inject_fault,
                     "Perturb a transformed coefficient (self-test)");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Truncation-ladder verdict for one energy");
  add_model_flags(oracle, true);
  double energy = 0.0;
  oracle->add_option("--energy", energy, "Energy to locate in the spectrum")
      ->required();
  oracle->add_option("--tol-oracle", tol_oracle, "Match tolerance")
      ->capture_default_str();
  oracle->add_option("--truncation", truncations, "Truncation ladder")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (scan->parsed()) {
      tprabi::AlphaScanSpec spec;
      spec.lambda_grid = parse_range(lambda_range);
      spec.threads = threads;
      tprabi::cmd_alpha_scan(spec).write_path(resolve_out(out));
      return 0;
    }
    if (solve->parsed()) {
      tprabi::SolveSpec spec;
      spec.n = n;
      spec.omega = omega;
      spec.lambda = lambda;
      spec.epsilon = epsilon;
      if (delta_set) spec.delta = delta;
      spec.branch = parse_branch(branch);
      spec.tol_delta_match = tol_delta_match;
      spec.tol_oracle = tol_oracle;
      spec.truncations = truncations;
      spec.run_oracle = !no_oracle;
      spec.solver.seeds = seeds;
      spec.solver.rng_seed = seed;
      spec.solver.tolerance = std::min(tol_residual, 1e-10);
      tprabi::cmd_solve(spec).write_path(resolve_out(out));
      return 0;
    }
    if (sweep->parsed()) {
      tprabi::SweepGridSpec spec;
      spec.n = n;
      spec.omega = omega;
      if (lambda_range.empty())
        spec.lambda_grid = tprabi::GridSpec{lambda, lambda, 1};
      else
        spec.lambda_grid = parse_range(lambda_range);
      if (epsilon_range.empty())
        spec.epsilon_grid = tprabi::GridSpec{epsilon, epsilon, 1};
      else
        spec.epsilon_grid = parse_range(epsilon_range);
      if (delta_set) spec.delta = delta;
      spec.branch = parse_branch(branch);
      spec.tol_delta_match = tol_delta_match;
      spec.threads = threads;
      spec.solver.seeds = seeds;
      spec.solver.rng_seed = seed;
      tprabi::cmd_sweep(spec).write_path(resolve_out(out));
      return 0;
    }
    if (verify->parsed()) {
      tprabi::CheckOptions options;
      if (!only.empty()) options.only = only;
      options.inject_fault = inject_fault;
      const auto results = tprabi::run_checks(options);
      tprabi::verify_table(results).write_path(resolve_out(out));
      for (const auto& r : results)
        if (!r.pass) return 1;
      return 0;
    }
    if (oracle->parsed()) {
      tprabi::OracleSpec spec;
      spec.omega = omega;
      spec.lambda = lambda;
      spec.epsilon = epsilon;
      spec.delta = delta;
      spec.energy = energy;
      spec.tol = tol_oracle;
      spec.truncations = truncations;
      tprabi::cmd_oracle(spec).write_path(resolve_out(out));
      return 0;
    }
  } catch (const tprabi::InvalidParameter& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const tprabi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
