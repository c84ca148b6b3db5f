#include "tprabi/bethe.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <random>

namespace tprabi {

namespace {

constexpr double kVerifyTol = 1e-9;
constexpr double kPhysicalTol = 1e-8;
constexpr double kDistinctTol = 1e-8;
constexpr double kDedupTol = 1e-7;

// (4 a om^2 - 4 (8 a^3 + a) lam^2 - lam om)/lam^2; equals -p3.
Complex sum_sq_weight(Complex a, double om, double lam) {
  return (4.0 * a * om * om - 4.0 * (8.0 * a * a * a + a) * lam * lam -
          lam * om) /
         (lam * lam);
}

void sort_canonical(std::vector<Complex>& roots) {
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

double set_distance(const std::vector<Complex>& a,
                    const std::vector<Complex>& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

double max_abs(std::span<const Complex> v) {
  double m = 0.0;
  for (const Complex& x : v) m = std::max(m, std::abs(x));
  return m;
}

// Deterministic uniform draw independent of library distribution details.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double lo, double hi) {
    const double u = (gen() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
};

}  // namespace

Complex energy_level(int n, Complex alpha, const ModelParams& params) {
  if (n < 0) throw InvalidParameter("energy_level: n must be nonnegative");
  if (params.lambda == 0.0)
    throw InvalidParameter("energy_level: lambda must be nonzero");
  const double om = params.omega, lam = params.lambda, eps = params.epsilon;
  const Complex a = alpha;
  const Complex denom = 2.0 * a * (2.0 * a * lam + om);
  if (std::abs(denom) < 1e-12)
    throw SingularDenominator("energy_level: 2 alpha (2 alpha lambda + omega) ~ 0");
  const double dn = static_cast<double>(n);
  const Complex a2 = a * a;
  const Complex num =
      4.0 * a * (dn + 1.0) * om * om -
      2.0 * eps * (2.0 * a2 * lam + a * om + lam) -
      2.0 * a * lam * lam * (8.0 * a2 * (2.0 * dn + 3.0) + 2.0 * dn + 1.0) -
      lam * om * (8.0 * a2 + dn - 2.0);
  return num / denom;
}

Complex sum_constraint(std::span<const Complex> roots,
                       const OdeCoefficients& c) {
  Complex sum(0.0);
  for (const Complex& z : roots) sum += z;
  return c.p3 * sum;
}

Complex delta_squared(int n, Complex alpha, const ModelParams& params,
                      std::span<const Complex> roots, Complex energy) {
  if (static_cast<int>(roots.size()) != n)
    throw InvalidParameter("delta_squared: root count must equal n");
  if (params.lambda == 0.0)
    throw InvalidParameter("delta_squared: lambda must be nonzero");
  const double om = params.omega, lam = params.lambda, eps = params.epsilon;
  const Complex a = alpha;
  const Complex e = energy;
  const double dn = static_cast<double>(n);
  Complex sum_sq(0.0);
  for (const Complex& z : roots) sum_sq += z * z;
  const Complex a2 = a * a;
  return dn * om * e - e * e -
         lam * lam * (dn - dn * dn - 2.0 + sum_sq_weight(a, om, lam) * sum_sq) +
         eps * eps + 12.0 * a2 * lam * lam * (2.0 * dn * (dn + 1.0) + 1.0) -
         dn * dn * om * om + 2.0 * a * lam * (2.0 * dn + 1.0) * (e + 2.0 * om) +
         eps * (2.0 * a * (lam + 2.0 * lam * dn) + dn * om);
}

Complex ground_state_energy(Complex alpha, const ModelParams& params) {
  const double om = params.omega, lam = params.lambda, eps = params.epsilon;
  const Complex a = alpha;
  const Complex denom = a * (2.0 * a * lam + om);
  if (std::abs(denom) < 1e-12)
    throw SingularDenominator("ground_state_energy: singular denominator");
  return (om * (lam - a * (4.0 * a * lam + eps)) -
          lam * (24.0 * a * a * a * lam + 2.0 * a * a * eps + a * lam + eps) +
          2.0 * a * om * om) /
         denom;
}

Complex ground_state_delta_sq(Complex alpha, const ModelParams& params,
                              Complex e0) {
  const double om = params.omega, lam = params.lambda, eps = params.epsilon;
  const Complex a = alpha;
  return 2.0 * lam * (a * (6.0 * a * lam + e0 + 2.0 * om) + lam) +
         2.0 * a * lam * eps - e0 * e0 + eps * eps;
}

Complex first_excited_energy(Complex alpha, const ModelParams& params) {
  const double om = params.omega, lam = params.lambda, eps = params.epsilon;
  const Complex a = alpha;
  const Complex denom = 2.0 * a * (2.0 * a * lam + om);
  if (std::abs(denom) < 1e-12)
    throw SingularDenominator("first_excited_energy: singular denominator");
  return (om * (lam - 2.0 * a * (4.0 * a * lam + eps)) -
          2.0 * lam *
              ((40.0 * a * a + 3.0) * a * lam + 2.0 * a * a * eps + eps) +
          8.0 * a * om * om) /
         denom;
}

Complex first_excited_delta_sq(Complex alpha, const ModelParams& params,
                               Complex e1, Complex z1) {
  const double om = params.omega, lam = params.lambda, eps = params.epsilon;
  const Complex a = alpha;
  return lam * lam *
             (60.0 * a * a + 2.0 - sum_sq_weight(a, om, lam) * z1 * z1) +
         (6.0 * a * lam + om) * e1 + 12.0 * a * lam * om +
         eps * (6.0 * a * lam + om) - e1 * e1 - om * om + eps * eps;
}

std::vector<Complex> bae_residuals(std::span<const Complex> roots,
                                   const OdeCoefficients& c) {
  const std::size_t n = roots.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(roots[i] - roots[j]) <= 1e-12)
        throw DegenerateRoots("bae_residuals: coincident roots");

  std::vector<Complex> residuals(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex zi = roots[i];
    Complex quad(0.0), triple(0.0), pair(0.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      pair += 1.0 / (zi - roots[j]);
      for (std::size_t l = 0; l < n; ++l) {
        if (l == i || l == j) continue;
        triple += 1.0 / ((zi - roots[l]) * (zi - roots[j]));
        for (std::size_t p = 0; p < n; ++p) {
          if (p == i || p == j || p == l) continue;
          quad += 1.0 / ((zi - roots[p]) * (zi - roots[l]) * (zi - roots[j]));
        }
      }
    }
    residuals[i] = 4.0 * quad + c.a1 * zi * 3.0 * triple +
                   (c.b2 * zi * zi + c.b0) * 2.0 * pair +
                   c.p3 * zi * zi * zi + c.p1 * zi;
  }
  return residuals;
}

namespace {

// Residual map for the Newton iteration; infinity at collisions.
bool well_separated(const std::vector<Complex>& z) {
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j)
      if (std::abs(z[i] - z[j]) <= 1e-10) return false;
  return true;
}

}  // namespace

BaeSolveResult solve_bae(int n, const OdeCoefficients& c,
                         const SolveOptions& options) {
  if (n < 0) throw InvalidParameter("solve_bae: n must be nonnegative");
  if (n == 0) return {};  // vacuous system
  if (std::abs(c.q4) >= 1e-9)
    throw InvalidParameter("solve_bae: q4 must vanish (gauge exponent off quartic)");

  BaeSolveResult result;
  Rng rng(options.rng_seed);

  for (int seed = 0; seed < options.seeds; ++seed) {
    ++result.seeds_tried;
    std::vector<Complex> z(n);
    for (int k = 0; k < n; ++k) {
      const double r = options.seed_radius * std::sqrt(rng.uniform(0.0, 1.0));
      const double t = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
      z[k] = std::polar(r, t);
    }
    if (!well_separated(z)) continue;

    bool converged = false;
    std::vector<Complex> f = bae_residuals(z, c);
    double fnorm = max_abs(f);
    for (int iter = 0; iter < options.max_iterations; ++iter) {
      if (fnorm < options.tolerance) {
        converged = true;
        break;
      }
      // finite-difference Jacobian; the map is holomorphic in each root
      Eigen::MatrixXcd jac(n, n);
      bool jac_ok = true;
      for (int col = 0; col < n && jac_ok; ++col) {
        const double h = 1e-7 * (1.0 + std::abs(z[col]));
        std::vector<Complex> zp = z, zm = z;
        zp[col] += h;
        zm[col] -= h;
        if (!well_separated(zp) || !well_separated(zm)) {
          jac_ok = false;
          break;
        }
        const auto fp = bae_residuals(zp, c);
        const auto fm = bae_residuals(zm, c);
        for (int row = 0; row < n; ++row)
          jac(row, col) = (fp[row] - fm[row]) / (2.0 * h);
      }
      if (!jac_ok) break;

      Eigen::VectorXcd rhs(n);
      for (int row = 0; row < n; ++row) rhs(row) = -f[row];
      const Eigen::VectorXcd step = jac.fullPivLu().solve(rhs);
      if (!step.allFinite()) break;

      // backtracking with halving until the residual shrinks
      double t = 1.0;
      bool accepted = false;
      for (int bt = 0; bt < 40; ++bt) {
        std::vector<Complex> trial = z;
        for (int k = 0; k < n; ++k) trial[k] += t * step(k);
        if (well_separated(trial)) {
          const auto ft = bae_residuals(trial, c);
          const double tnorm = max_abs(ft);
          if (tnorm < fnorm) {
            z = std::move(trial);
            f = ft;
            fnorm = tnorm;
            accepted = true;
            break;
          }
        }
        t *= options.damping;
      }
      if (!accepted) break;
    }
    if (!converged || fnorm >= options.tolerance) continue;

    bool distinct = true;
    for (int i = 0; i < n && distinct; ++i)
      for (int j = i + 1; j < n; ++j)
        if (std::abs(z[i] - z[j]) < kDistinctTol) {
          distinct = false;
          break;
        }
    if (!distinct) continue;

    sort_canonical(z);
    bool duplicate = false;
    for (const auto& known : result.root_sets)
      if (set_distance(known, z) < kDedupTol) {
        duplicate = true;
        break;
      }
    ++result.seeds_converged;
    if (!duplicate) result.root_sets.push_back(std::move(z));
  }

  std::sort(result.root_sets.begin(), result.root_sets.end(),
            [](const auto& a, const auto& b) {
              for (std::size_t k = 0; k < a.size(); ++k) {
                if (a[k].real() != b[k].real()) return a[k].real() < b[k].real();
                if (a[k].imag() != b[k].imag()) return a[k].imag() < b[k].imag();
              }
              return false;
            });
  return result;
}

std::optional<NullspaceSolution> nullspace_oracle(int n,
                                                  const OdeCoefficients& c) {
  if (n < 0) throw InvalidParameter("nullspace_oracle: n must be >= 0");
  if (std::abs(c.q4) >= 1e-9)
    throw InvalidParameter("nullspace_oracle: q4 must vanish");

  constexpr double kRelTol = 1e-8;

  if (n == 0) {
    const Polynomial image = apply_operator(c, Polynomial::constant(1.0));
    const double defect = residual_norm(image);
    if (defect < kRelTol) return NullspaceSolution{{}, defect};
    return std::nullopt;
  }

  // L is linear: stack coefficients of L[z^k] for k = 0..n as columns of the
  // homogeneous system M * (c_0..c_{n-1}, 1)^T = 0.
  const int rows = n + 3;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows, n + 1);
  for (int k = 0; k <= n; ++k) {
    std::vector<Complex> mono(static_cast<std::size_t>(k) + 1, Complex(0.0));
    mono[k] = 1.0;
    const Polynomial image = apply_operator(c, Polynomial(std::move(mono)));
    for (int r = 0; r < rows; ++r)
      m(r, k) = image.coeff(static_cast<std::size_t>(r));
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  const auto& sing = svd.singularValues();
  const double smax = sing(0);
  const double smin = sing(sing.size() - 1);
  const double defect = smax > 0.0 ? smin / smax : 0.0;
  if (defect >= kRelTol) return std::nullopt;

  const Eigen::VectorXcd null_vec = svd.matrixV().col(n);
  const Complex monic = null_vec(n);
  if (std::abs(monic) < 1e-10) return std::nullopt;  // lower-degree null vector

  std::vector<Complex> coeffs(n + 1);
  for (int k = 0; k < n; ++k)
    coeffs[k] = Complex(null_vec(k)) / monic;
  coeffs[n] = 1.0;

  // roots of the monic polynomial via its companion matrix
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 1; k < n; ++k) comp(k, k - 1) = 1.0;
  for (int k = 0; k < n; ++k) comp(k, n - 1) = -coeffs[k];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(comp, false);
  std::vector<Complex> roots(n);
  for (int k = 0; k < n; ++k) roots[k] = eig.eigenvalues()(k);

  // polish against the polynomial
  const Polynomial poly(coeffs);
  const Polynomial dpoly = poly.derivative();
  for (Complex& r : roots)
    for (int it = 0; it < 3; ++it) {
      const Complex d = dpoly.eval(r);
      if (std::abs(d) < 1e-14) break;
      r -= poly.eval(r) / d;
    }
  sort_canonical(roots);
  return NullspaceSolution{std::move(roots), defect};
}

namespace {

BetheState assemble_state(int n, const AlphaBranch& branch,
                          const ModelParams& params, Complex energy,
                          std::vector<Complex> roots) {
  BetheState state;
  state.n = n;
  state.alpha = branch;
  state.energy = energy;
  state.roots = std::move(roots);
  state.delta_sq_required =
      delta_squared(n, branch.value, params, state.roots, energy);

  const OdeCoefficients c = ode_coefficients(
      params, branch.value, energy, state.delta_sq_required);
  state.sum_constraint_residual = std::abs(sum_constraint(state.roots, c));
  if (n >= 1) {
    double worst = 0.0;
    for (const Complex& r : bae_residuals(state.roots, c))
      worst = std::max(worst, std::abs(r));
    state.bae_residual = worst;
  }
  state.operator_residual =
      residual_norm(apply_operator(c, Polynomial::from_roots(state.roots)));

  state.verified = state.bae_residual < kVerifyTol &&
                   state.sum_constraint_residual < kVerifyTol &&
                   state.operator_residual < kVerifyTol;
  state.physical = std::abs(state.delta_sq_required.imag()) < kPhysicalTol &&
                   state.delta_sq_required.real() >= 0.0 &&
                   std::abs(energy.imag()) < kPhysicalTol;
  return state;
}

}  // namespace

std::vector<BetheState> enumerate_states(int n, const AlphaBranch& branch,
                                         double omega, double lambda,
                                         double epsilon,
                                         const SolveOptions& options) {
  if (n < 0) throw InvalidParameter("enumerate_states: n must be >= 0");
  // delta is an output of the pipeline; parameter validation only
  const ModelParams params(0.0, epsilon, omega, lambda);
  const Complex energy = energy_level(n, branch.value, params);

  std::vector<BetheState> states;
  if (n == 0) {
    states.push_back(assemble_state(0, branch, params, energy, {}));
    return states;
  }

  const OdeCoefficients c = ode_coefficients(params, branch.value, energy);
  const BaeSolveResult solved = solve_bae(n, c, options);
  for (const auto& roots : solved.root_sets)
    states.push_back(assemble_state(n, branch, params, energy, roots));
  return states;
}

std::vector<BetheState> consistency_solve(int n, const AlphaBranch& branch,
                                          double omega, double lambda,
                                          double epsilon,
                                          const SolveOptions& options) {
  if (!branch.admissible)
    throw InvalidParameter("consistency_solve: branch must be admissible");
  std::vector<BetheState> all =
      enumerate_states(n, branch, omega, lambda, epsilon, options);
  std::vector<BetheState> kept;
  for (auto& state : all)
    if (state.physical && state.verified) kept.push_back(std::move(state));
  return kept;
}

}  // namespace tprabi
