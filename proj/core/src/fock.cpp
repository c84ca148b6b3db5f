#include "tprabi/fock.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace tprabi {

FockMatrix build_hamiltonian(const ModelParams& params, int truncation) {
  if (truncation < 4)
    throw InvalidTruncation("build_hamiltonian: truncation must be >= 4");
  FockMatrix m;
  m.truncation = truncation;
  m.dim = 2 * (truncation + 1);
  m.entries.assign(static_cast<std::size_t>(m.dim) * m.dim, 0.0);

  for (int boson = 0; boson <= truncation; ++boson) {
    const int up = 2 * boson;
    const int down = 2 * boson + 1;
    m.at(up, up) = boson * params.omega + params.epsilon;
    m.at(down, down) = boson * params.omega - params.epsilon;
    m.at(up, down) = params.delta;
    m.at(down, up) = params.delta;
    if (boson + 2 <= truncation) {
      const double element =
          std::sqrt(static_cast<double>(boson + 1) * (boson + 2));
      const int up2 = 2 * (boson + 2);
      const int down2 = up2 + 1;
      m.at(up, up2) = params.lambda * element;
      m.at(up2, up) = params.lambda * element;
      m.at(down, down2) = -params.lambda * element;
      m.at(down2, down) = -params.lambda * element;
    }
  }
  return m;
}

std::vector<double> spectrum(const FockMatrix& m) {
  Eigen::Map<const Eigen::MatrixXd> mapped(m.entries.data(), m.dim, m.dim);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      mapped, Eigen::EigenvaluesOnly);
  const auto& values = solver.eigenvalues();
  return std::vector<double>(values.data(), values.data() + values.size());
}

LevelMatch converged_level_match(const ModelParams& params, double energy,
                                 double tol, std::span<const int> ladder) {
  if (params.lambda / params.omega >= 0.5)
    throw InvalidParameter(
        "converged_level_match: restricted to lambda/omega < 1/2 "
        "(no discrete spectrum beyond the collapse coupling)");
  static constexpr int kDefaultLadder[] = {40, 80, 160};
  if (ladder.empty()) ladder = kDefaultLadder;
  if (ladder.size() < 2)
    throw InvalidParameter("converged_level_match: need at least two rungs");

  std::vector<int> rungs(ladder.begin(), ladder.end());
  std::sort(rungs.begin(), rungs.end());

  auto nearest_at = [&](int truncation) {
    const std::vector<double> eigs =
        spectrum(build_hamiltonian(params, truncation));
    double best = eigs.front();
    for (double e : eigs)
      if (std::abs(e - energy) < std::abs(best - energy)) best = e;
    return best;
  };

  const double near_lo = nearest_at(rungs[rungs.size() - 2]);
  const double near_hi = nearest_at(rungs.back());
  const double movement = std::abs(near_hi - near_lo);

  LevelMatch match;
  match.nearest = near_hi;
  match.truncation_used = rungs.back();
  if (std::abs(near_lo - energy) <= tol && std::abs(near_hi - energy) <= tol) {
    if (movement >= tol / 10.0)
      throw TruncationUnstable(
          "converged_level_match: candidate moves between truncations");
    match.matched = true;
  }
  return match;
}

}  // namespace tprabi
