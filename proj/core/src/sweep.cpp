#include "tprabi/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "tprabi/alpha.hpp"
#include "tprabi/fock.hpp"
#include "tprabi/ode.hpp"

namespace tprabi {

namespace {

// Fills index-addressed slots; output order never depends on scheduling.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& body) {
  if (threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = hw == 0 ? 1 : static_cast<int>(hw);
  }
  threads = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(threads), count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        body(i);
      }
    });
  for (auto& th : pool) th.join();
}

long long flag(bool b) { return b ? 1 : 0; }

std::vector<int> selected_branches(int branch) {
  if (branch == 0) return {1, 2, 3, 4};
  if (branch < 1 || branch > 4)
    throw InvalidParameter("branch must be 1..4 or 0 (auto)");
  return {branch};
}

struct BranchStates {
  AlphaBranch branch;
  std::vector<BetheState> states;
};

// Candidate states at one parameter point. auto mode keeps admissible
// branches only; an explicit branch is honored as requested.
std::vector<BranchStates> states_at_point(int n, double omega, double lambda,
                                          double epsilon, int branch,
                                          const SolveOptions& solver) {
  const auto closed = alpha_closed_form(LambdaRatio(lambda / omega));
  std::vector<BranchStates> out;
  for (int idx : selected_branches(branch)) {
    const AlphaBranch& b = closed[idx - 1];
    if (branch == 0 && !b.admissible) continue;
    BranchStates bs{b, {}};
    if (n <= 1) {
      // closed-form fast path
      const ModelParams params(0.0, epsilon, omega, lambda);
      BetheState state;
      state.n = n;
      state.alpha = b;
      state.energy = n == 0 ? ground_state_energy(b.value, params)
                            : first_excited_energy(b.value, params);
      state.roots = n == 0 ? std::vector<Complex>{}
                           : std::vector<Complex>{Complex(0.0)};
      state.delta_sq_required =
          n == 0 ? ground_state_delta_sq(b.value, params, state.energy)
                 : first_excited_delta_sq(b.value, params, state.energy,
                                          Complex(0.0));
      const OdeCoefficients c = ode_coefficients(
          params, b.value, state.energy, state.delta_sq_required);
      state.sum_constraint_residual = std::abs(sum_constraint(state.roots, c));
      if (n == 1) {
        double worst = 0.0;
        for (const Complex& r : bae_residuals(state.roots, c))
          worst = std::max(worst, std::abs(r));
        state.bae_residual = worst;
      }
      state.operator_residual = residual_norm(
          apply_operator(c, Polynomial::from_roots(state.roots)));
      state.verified = state.bae_residual < 1e-9 &&
                       state.sum_constraint_residual < 1e-9 &&
                       state.operator_residual < 1e-9;
      state.physical = std::abs(state.delta_sq_required.imag()) < 1e-8 &&
                       state.delta_sq_required.real() >= 0.0 &&
                       std::abs(state.energy.imag()) < 1e-8;
      bs.states.push_back(std::move(state));
    } else {
      bs.states = enumerate_states(n, b, omega, lambda, epsilon, solver);
    }
    out.push_back(std::move(bs));
  }
  return out;
}

bool delta_matches(const BetheState& state, std::optional<double> delta,
                   double tol) {
  if (!delta) return true;
  const Complex target(*delta * *delta);
  return std::abs(state.delta_sq_required - target) <= tol;
}

}  // namespace

std::vector<double> GridSpec::points() const {
  if (steps < 1) throw InvalidParameter("grid needs at least one step");
  if (steps == 1) {
    if (min != max)
      throw InvalidParameter("single-point grid requires min == max");
    return {min};
  }
  if (!(min < max))
    throw InvalidParameter("ranged grid requires min < max");
  std::vector<double> pts(steps);
  for (int k = 0; k < steps; ++k)
    pts[k] = min + (max - min) * k / (steps - 1);
  return pts;
}

CsvTable cmd_alpha_scan(const AlphaScanSpec& spec) {
  const std::vector<double> grid = spec.lambda_grid.points();
  for (double L : grid)
    if (L == 0.0)
      throw InvalidParameter("alpha scan grid must exclude Lambda = 0");

  std::vector<std::string> header = {"Lambda"};
  for (int k = 1; k <= 4; ++k) {
    header.push_back("re_alpha" + std::to_string(k));
    header.push_back("im_alpha" + std::to_string(k));
  }
  for (int k = 1; k <= 4; ++k) header.push_back("admissible" + std::to_string(k));
  for (int k = 1; k <= 4; ++k) header.push_back("residual" + std::to_string(k));
  header.push_back("branch_point");
  CsvTable table(header);

  // closed-form values are computed per point; labeling is a serial pass
  struct PointData {
    std::array<Complex, 4> values;
    bool branch_point = false;
  };
  std::vector<PointData> data(grid.size());
  parallel_for(grid.size(), spec.threads, [&](std::size_t i) {
    try {
      const auto closed = alpha_closed_form(LambdaRatio(grid[i]));
      for (int k = 0; k < 4; ++k) data[i].values[k] = closed[k].value;
    } catch (const Error&) {
      const auto oracle = alpha_companion(LambdaRatio(grid[i]));
      data[i].values = {oracle[0], oracle[1], oracle[2], oracle[3]};
      data[i].branch_point = true;
    }
  });

  // nearest-neighbor continuation between consecutive grid points
  for (std::size_t i = 1; i < data.size(); ++i) {
    std::array<int, 4> perm = {0, 1, 2, 3}, best = perm;
    double best_cost = -1.0;
    std::sort(perm.begin(), perm.end());
    do {
      double cost = 0.0;
      for (int k = 0; k < 4; ++k)
        cost += std::abs(data[i].values[perm[k]] - data[i - 1].values[k]);
      if (best_cost < 0.0 || cost < best_cost) {
        best_cost = cost;
        best = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    const auto old = data[i].values;
    for (int k = 0; k < 4; ++k) data[i].values[k] = old[best[k]];
  }

  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<CsvTable::Cell> row;
    row.emplace_back(grid[i]);
    for (int k = 0; k < 4; ++k) {
      row.emplace_back(data[i].values[k].real());
      row.emplace_back(data[i].values[k].imag());
    }
    for (int k = 0; k < 4; ++k)
      row.emplace_back(flag(admissible(data[i].values[k])));
    for (int k = 0; k < 4; ++k) {
      if (data[i].branch_point)
        row.emplace_back(-1.0);  // closed form invalid here
      else
        row.emplace_back(std::abs(
            gauge_quartic(LambdaRatio(grid[i]), data[i].values[k])));
    }
    row.emplace_back(flag(data[i].branch_point));
    table.push_row(std::move(row));
  }
  return table;
}

namespace {

std::vector<std::string> solve_header(int n) {
  std::vector<std::string> header = {"n",    "branch",   "re_alpha",
                                     "im_alpha", "re_E", "im_E"};
  for (int k = 1; k <= n; ++k) {
    header.push_back("re_z" + std::to_string(k));
    header.push_back("im_z" + std::to_string(k));
  }
  header.insert(header.end(),
                {"re_delta_sq", "im_delta_sq", "bae_residual", "sum_residual",
                 "operator_residual", "verified", "physical", "oracle_matched",
                 "oracle_nearest", "oracle_truncation"});
  return header;
}

}  // namespace

CsvTable cmd_solve(const SolveSpec& spec) {
  if (spec.n < 0) throw InvalidParameter("n must be nonnegative");
  if (spec.lambda == 0.0)
    throw InvalidParameter("lambda must be nonzero for the solve pipeline");
  CsvTable table(solve_header(spec.n));

  const auto groups = states_at_point(spec.n, spec.omega, spec.lambda,
                                      spec.epsilon, spec.branch, spec.solver);
  for (const auto& group : groups) {
    for (const auto& state : group.states) {
      const bool physical =
          state.physical &&
          delta_matches(state, spec.delta, spec.tol_delta_match);

      long long oracle_matched = -1;  // not run
      double oracle_nearest = 0.0;
      long long oracle_truncation = 0;
      if (spec.run_oracle && physical &&
          spec.lambda / spec.omega < 0.5) {
        const double delta_phys = std::sqrt(state.delta_sq_required.real());
        const ModelParams full(delta_phys, spec.epsilon, spec.omega,
                               spec.lambda);
        try {
          const LevelMatch match = converged_level_match(
              full, state.energy.real(), spec.tol_oracle, spec.truncations);
          oracle_matched = flag(match.matched);
          oracle_nearest = match.nearest;
          oracle_truncation = match.truncation_used;
        } catch (const TruncationUnstable&) {
          oracle_matched = -1;
        }
      }

      std::vector<CsvTable::Cell> row;
      row.emplace_back(static_cast<long long>(state.n));
      row.emplace_back(static_cast<long long>(group.branch.index));
      row.emplace_back(state.alpha.value.real());
      row.emplace_back(state.alpha.value.imag());
      row.emplace_back(state.energy.real());
      row.emplace_back(state.energy.imag());
      for (int k = 0; k < spec.n; ++k) {
        row.emplace_back(state.roots[k].real());
        row.emplace_back(state.roots[k].imag());
      }
      row.emplace_back(state.delta_sq_required.real());
      row.emplace_back(state.delta_sq_required.imag());
      row.emplace_back(state.bae_residual);
      row.emplace_back(state.sum_constraint_residual);
      row.emplace_back(state.operator_residual);
      row.emplace_back(flag(state.verified));
      row.emplace_back(flag(physical));
      row.emplace_back(oracle_matched);
      row.emplace_back(oracle_nearest);
      row.emplace_back(oracle_truncation);
      table.push_row(std::move(row));
    }
  }
  return table;
}

CsvTable cmd_sweep(const SweepGridSpec& spec) {
  if (spec.n < 0) throw InvalidParameter("n must be nonnegative");
  const std::vector<double> lambdas = spec.lambda_grid.points();
  const std::vector<double> epsilons = spec.epsilon_grid.points();
  for (double lam : lambdas)
    if (lam == 0.0) throw InvalidParameter("sweep grid must exclude lambda = 0");

  std::vector<std::string> header = {
      "lambda",        "epsilon",     "branch",
      "re_alpha",      "im_alpha",    "re_E",
      "im_E",          "re_delta_sq", "im_delta_sq",
      "delta_sq_mismatch", "physical", "verified",
      "bae_residual",  "sum_residual", "operator_residual"};
  CsvTable table(header);

  const std::size_t cells = lambdas.size() * epsilons.size();
  std::vector<std::vector<std::vector<CsvTable::Cell>>> slots(cells);
  parallel_for(cells, spec.threads, [&](std::size_t cell) {
    const double lam = lambdas[cell / epsilons.size()];
    const double eps = epsilons[cell % epsilons.size()];
    const auto groups = states_at_point(spec.n, spec.omega, lam, eps,
                                        spec.branch, spec.solver);
    for (const auto& group : groups) {
      for (const auto& state : group.states) {
        double mismatch = -1.0;
        if (spec.delta) {
          const Complex target(*spec.delta * *spec.delta);
          mismatch = std::abs(state.delta_sq_required - target);
        }
        const bool physical =
            state.physical &&
            delta_matches(state, spec.delta, spec.tol_delta_match);
        std::vector<CsvTable::Cell> row;
        row.emplace_back(lam);
        row.emplace_back(eps);
        row.emplace_back(static_cast<long long>(group.branch.index));
        row.emplace_back(state.alpha.value.real());
        row.emplace_back(state.alpha.value.imag());
        row.emplace_back(state.energy.real());
        row.emplace_back(state.energy.imag());
        row.emplace_back(state.delta_sq_required.real());
        row.emplace_back(state.delta_sq_required.imag());
        row.emplace_back(mismatch);
        row.emplace_back(flag(physical));
        row.emplace_back(flag(state.verified));
        row.emplace_back(state.bae_residual);
        row.emplace_back(state.sum_constraint_residual);
        row.emplace_back(state.operator_residual);
        slots[cell].push_back(std::move(row));
      }
    }
  });
  for (auto& cell_rows : slots)
    for (auto& row : cell_rows) table.push_row(std::move(row));
  return table;
}

CsvTable cmd_oracle(const OracleSpec& spec) {
  CsvTable table({"omega", "lambda", "epsilon", "delta", "energy", "tol",
                  "matched", "nearest", "truncation", "unstable"});
  const ModelParams params(spec.delta, spec.epsilon, spec.omega, spec.lambda);
  long long matched = 0, unstable = 0, truncation = 0;
  double nearest = 0.0;
  try {
    const LevelMatch match =
        converged_level_match(params, spec.energy, spec.tol, spec.truncations);
    matched = flag(match.matched);
    nearest = match.nearest;
    truncation = match.truncation_used;
  } catch (const TruncationUnstable&) {
    unstable = 1;
  }
  table.push_row({spec.omega, spec.lambda, spec.epsilon, spec.delta,
                  spec.energy, spec.tol, matched, nearest, truncation,
                  unstable});
  return table;
}

CsvTable verify_table(const std::vector<CheckResult>& results) {
  CsvTable table({"check", "measured", "threshold", "verdict"});
  for (const auto& r : results)
    table.push_row({r.name, r.measured, r.threshold,
                    std::string(r.pass ? "pass" : "fail")});
  return table;
}

}  // namespace tprabi
