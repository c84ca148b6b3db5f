#ifndef TPRABI_BETHE_HPP
#define TPRABI_BETHE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tprabi/alpha.hpp"
#include "tprabi/ode.hpp"
#include "tprabi/polynomial.hpp"
#include "tprabi/types.hpp"

namespace tprabi {

// Closed-form level energy E_n for polynomial degree n; equivalent to the
// constraint q2 = -n p3 on the induced operator coefficients.
// Throws SingularDenominator when |2 alpha (2 alpha lambda + omega)| < 1e-12.
Complex energy_level(int n, Complex alpha, const ModelParams& params);

// p3 * sum(z_i). A verified state requires |p3 * sum| < 1e-9; the product
// form is kept as stated (either factor may be the vanishing one).
Complex sum_constraint(std::span<const Complex> roots,
                       const OdeCoefficients& c);

// Closed-form requirement on delta^2 for degree n, roots {z_i} and energy E.
// Physical states additionally need Im == 0 and Re >= 0; classification is
// left to the caller.
Complex delta_squared(int n, Complex alpha, const ModelParams& params,
                      std::span<const Complex> roots, Complex energy);

// n = 0 and n = 1 specializations of the closed forms (used by the sweep
// fast path and as the second route in the specialization identities).
Complex ground_state_energy(Complex alpha, const ModelParams& params);
Complex ground_state_delta_sq(Complex alpha, const ModelParams& params,
                              Complex e0);
Complex first_excited_energy(Complex alpha, const ModelParams& params);
Complex first_excited_delta_sq(Complex alpha, const ModelParams& params,
                               Complex e1, Complex z1);

// Per-root residuals of the coupled algebraic equations: for each i,
//   sum_{p!=l!=j!=i} 4/((z_i-z_p)(z_i-z_l)(z_i-z_j))
// + a1 z_i sum_{l!=j!=i} 3/((z_i-z_l)(z_i-z_j))
// + (b2 z_i^2 + b0) sum_{j!=i} 2/(z_i-z_j) + p3 z_i^3 + p1 z_i.
// All sums run over pairwise-distinct indices. Throws DegenerateRoots.
std::vector<Complex> bae_residuals(std::span<const Complex> roots,
                                   const OdeCoefficients& c);

struct SolveOptions {
  int seeds = 64;              // multi-start count
  double seed_radius = 3.0;    // initial roots drawn from this disc
  int max_iterations = 200;
  double tolerance = 1e-10;    // max-norm convergence threshold
  double damping = 0.5;        // backtracking halving factor
  std::uint64_t rng_seed = 0x9e3779b97f4a7c15ull;
};

struct BaeSolveResult {
  // Deduplicated converged root sets, each sorted by (Re, Im).
  std::vector<std::vector<Complex>> root_sets;
  int seeds_converged = 0;
  int seeds_tried = 0;
};

// Damped Newton iteration on the n-dimensional residual map, multi-start
// from random configurations. Root sets with internal pairwise distance
// < 1e-8 are discarded; sets closer than 1e-7 after canonical sorting are
// merged. An empty list with seeds_converged == 0 means no seed converged.
// Requires n >= 1 and |q4| < 1e-9.
BaeSolveResult solve_bae(int n, const OdeCoefficients& c,
                         const SolveOptions& options = {});

struct NullspaceSolution {
  std::vector<Complex> roots;
  double defect;  // relative smallest singular value of the stacked system
};

// Linear route to the same roots: expand L[monic degree-n polynomial] and
// require all coefficients to vanish, a linear system in the n unknown
// lower coefficients. Present iff the stacked homogeneous system has a
// relative singular value < 1e-8 whose null vector is affine in the monic
// normalization. Requires |q4| < 1e-9.
std::optional<NullspaceSolution> nullspace_oracle(int n,
                                                  const OdeCoefficients& c);

// Candidate solution bundle for one level.
struct BetheState {
  int n = 0;
  AlphaBranch alpha{};
  Complex energy{};
  std::vector<Complex> roots;
  Complex delta_sq_required{};
  double bae_residual = 0.0;
  double sum_constraint_residual = 0.0;
  double operator_residual = 0.0;
  bool physical = false;  // delta^2 real and nonnegative, energy real
  bool verified = false;  // all three residuals below 1e-9
};

// Full pipeline at fixed (omega, lambda, epsilon) for one gauge branch:
// energy from the closed form, roots from the damped-Newton solver, the
// sum constraint, delta^2, and exact re-verification of the operator
// identity. Returns every discovered candidate, including nonphysical ones
// (complex energy or delta^2), labeled.
std::vector<BetheState> enumerate_states(int n, const AlphaBranch& branch,
                                         double omega, double lambda,
                                         double epsilon,
                                         const SolveOptions& options = {});

// enumerate_states filtered to physical, verified states. The branch must be
// admissible. An empty list means no physical solution at these parameters.
std::vector<BetheState> consistency_solve(int n, const AlphaBranch& branch,
                                          double omega, double lambda,
                                          double epsilon,
                                          const SolveOptions& options = {});

}  // namespace tprabi

#endif  // TPRABI_BETHE_HPP
