#ifndef TPRABI_SWEEP_HPP
#define TPRABI_SWEEP_HPP

#include <optional>
#include <vector>

#include "tprabi/bethe.hpp"
#include "tprabi/checks.hpp"
#include "tprabi/csv.hpp"
#include "tprabi/types.hpp"

namespace tprabi {

// Inclusive linear grid with `steps` points. A single-point grid is allowed
// (min == max, steps == 1); ranged grids need steps >= 2 and min < max.
struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int steps = 1;

  std::vector<double> points() const;  // throws InvalidParameter
};

struct AlphaScanSpec {
  GridSpec lambda_grid;
  int threads = 0;  // 0 = hardware concurrency
};

struct SolveSpec {
  int n = 0;
  double omega = 1.0;
  double lambda = 0.0;
  double epsilon = 0.0;
  std::optional<double> delta;  // fixed delta: physical also requires the match
  int branch = 0;               // 0 = all admissible branches, else 1..4
  double tol_delta_match = 0.05;
  double tol_oracle = 1e-6;
  std::vector<int> truncations = {40, 80, 160};
  bool run_oracle = true;
  SolveOptions solver;
};

struct SweepGridSpec {
  int n = 0;
  double omega = 1.0;
  GridSpec lambda_grid;
  GridSpec epsilon_grid;
  std::optional<double> delta;
  int branch = 0;
  double tol_delta_match = 0.05;
  int threads = 0;
  SolveOptions solver;  // used for n >= 2
};

struct OracleSpec {
  double omega = 1.0;
  double lambda = 0.0;
  double epsilon = 0.0;
  double delta = 0.0;
  double energy = 0.0;
  double tol = 1e-6;
  std::vector<int> truncations = {40, 80, 160};
};

// Branch curves over the coupling grid (continuity-labeled). Columns:
// Lambda, re/im_alpha1..4, admissible1..4, residual1..4, branch_point.
// At a branch point of the radical chain the row carries companion-matrix
// values, residual sentinel -1 and branch_point = 1.
CsvTable cmd_alpha_scan(const AlphaScanSpec& spec);

// Single-point pipeline; one row per discovered candidate state per branch.
CsvTable cmd_solve(const SolveSpec& spec);

// Level surfaces and constraint loci over a (lambda, epsilon) grid,
// lambda-major, deterministic for any thread count. n = 0 and n = 1 use the
// closed forms; larger n runs the full solver per cell.
CsvTable cmd_sweep(const SweepGridSpec& spec);

// Truncation-ladder verdict for one externally supplied energy.
CsvTable cmd_oracle(const OracleSpec& spec);

// Render check results as a table (check, measured, threshold, verdict).
CsvTable verify_table(const std::vector<CheckResult>& results);

}  // namespace tprabi

#endif  // TPRABI_SWEEP_HPP
