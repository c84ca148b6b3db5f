#include "tprabi/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "tprabi/alpha.hpp"
#include "tprabi/bethe.hpp"
#include "tprabi/fock.hpp"
#include "tprabi/ode.hpp"
#include "tprabi/polynomial.hpp"
#include "tprabi/types.hpp"

namespace tprabi {

namespace {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double lo, double hi) {
    const double u = (gen() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  Complex disc(double radius) {
    const double r = radius * std::sqrt(uniform(0.0, 1.0));
    const double t = uniform(0.0, 2.0 * 3.14159265358979323846);
    return std::polar(r, t);
  }
};

std::vector<Complex> separated_roots(Rng& rng, int n, double min_dist) {
  std::vector<Complex> roots;
  while (static_cast<int>(roots.size()) < n) {
    const Complex cand = rng.disc(2.0);
    bool ok = true;
    for (const Complex& r : roots)
      if (std::abs(cand - r) < min_dist) {
        ok = false;
        break;
      }
    if (ok) roots.push_back(cand);
  }
  return roots;
}

double check_identities(Rng& rng) {
  double worst = 0.0;
  for (int n = 2; n <= 10; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto roots = separated_roots(rng, n, 0.1);
      const SymmetricSums sums = symmetric_sums(roots);
      const double expected = 0.5 * n * (n - 1);
      worst = std::max({worst, std::abs(sums.s1),
                        std::abs(sums.s2 - expected), std::abs(sums.s3)});
    }
  }
  return worst;
}

std::vector<double> oracle_grid() {
  const auto zeros = discriminant_zeros(0.019, 1.51);
  std::vector<double> grid;
  const int count = 200;
  int k = 0;
  while (static_cast<int>(grid.size()) < count) {
    const double L = 0.02 + (1.5 - 0.02) * (k % 977) / 976.0;
    ++k;
    bool excluded = false;
    for (double z : zeros)
      if (std::abs(L - z) < 1e-3) excluded = true;
    if (!excluded) grid.push_back(L);
  }
  return grid;
}

double check_alpha_oracle() {
  double worst = 0.0;
  for (double L : oracle_grid()) {
    const auto closed = alpha_closed_form(LambdaRatio(L));
    const auto oracle = alpha_companion(LambdaRatio(L));
    double hausdorff = 0.0;
    for (const auto& branch : closed) {
      double nearest = 1e300;
      for (const Complex& r : oracle)
        nearest = std::min(nearest, std::abs(branch.value - r));
      hausdorff = std::max(hausdorff, nearest);
    }
    for (const Complex& r : oracle) {
      double nearest = 1e300;
      for (const auto& branch : closed)
        nearest = std::min(nearest, std::abs(branch.value - r));
      hausdorff = std::max(hausdorff, nearest);
    }
    worst = std::max(worst, hausdorff);
  }
  return worst;
}

double check_alpha_residual() {
  double worst = 0.0;
  for (double L : oracle_grid())
    for (const auto& branch : alpha_closed_form(LambdaRatio(L)))
      worst = std::max(worst, branch.quartic_residual);
  return worst;
}

double check_alpha_vieta() {
  double worst = 0.0;
  for (double L : oracle_grid()) {
    const auto roots = alpha_companion(LambdaRatio(L));
    Complex sum(0.0), prod(1.0), pair(0.0);
    for (const Complex& r : roots) {
      sum += r;
      prod *= r;
    }
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) pair += roots[i] * roots[j];
    const double pair_expected = (4.0 * L * L - 4.0) / (16.0 * L * L);
    worst = std::max({worst, std::abs(sum), std::abs(prod - 1.0 / 16.0),
                      std::abs(pair - pair_expected)});
  }
  return worst;
}

double check_gauge_reduction(Rng& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const double om = rng.uniform(0.3, 2.0);
    const double lam = rng.uniform(-1.0, 1.0) < 0.0 ? rng.uniform(-0.9, -0.05)
                                                    : rng.uniform(0.05, 0.9);
    const double eps = rng.uniform(-1.5, 1.5);
    const double del = rng.uniform(0.0, 2.0);
    const Complex e(rng.uniform(-3.0, 3.0), rng.uniform(-1.0, 1.0));
    const ModelParams params(del, eps, om, lam);
    const OdeCoefficients c = ode_coefficients(params, Complex(0.0), e);

    const double lam2 = lam * lam, om2 = om * om;
    const Complex expected[8] = {
        0.0,
        1.0 - om2 / lam2,
        (e + 2.0 * om + eps) / lam,
        om / lam,
        om * (e - om + eps) / lam2,
        1.0,
        2.0 * (eps - om) / lam,
        (2.0 * lam2 + eps * eps - e * e - del * del) / lam2};
    const Complex got[8] = {c.a1, c.b2, c.b0, c.p3, c.p1, c.q4, c.q2, c.q0};
    for (int k = 0; k < 8; ++k) {
      const double scale = 1.0 + std::abs(expected[k]);
      worst = std::max(worst, std::abs(got[k] - expected[k]) / scale);
    }
  }
  return worst;
}

double check_gauge_pointwise(Rng& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 40; ++trial) {
    const double om = rng.uniform(0.5, 1.5);
    const double lam = rng.uniform(0.1, 0.6);
    const double eps = rng.uniform(-1.0, 1.0);
    const double del = rng.uniform(0.0, 1.5);
    const Complex e(rng.uniform(-2.0, 2.0), rng.uniform(-1.0, 1.0));
    const Complex a(rng.uniform(-0.4, 0.4), rng.uniform(-0.3, 0.3));
    const ModelParams params(del, eps, om, lam);
    const OdeCoefficients c = ode_coefficients(params, a, e);

    const int deg = static_cast<int>(rng.uniform(0.0, 6.999));
    std::vector<Complex> coeffs(deg + 1);
    for (Complex& ck : coeffs)
      ck = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    const Polynomial phi(coeffs);
    const Polynomial image = apply_operator(c, phi);

    for (int k = 0; k < 20; ++k) {
      const Complex z = rng.disc(1.5);
      const Complex raw = raw_residual_pointwise(params, e, a, phi, z);
      const Complex via = std::exp(a * z * z) * image.eval(z);
      worst = std::max(worst, std::abs(raw - via) / (1.0 + std::abs(via)));
    }
  }
  return worst;
}

// admissible closed-form branches at this coupling ratio
std::vector<AlphaBranch> admissible_branches(double lambda_over_omega) {
  std::vector<AlphaBranch> out;
  for (const auto& branch : alpha_closed_form(LambdaRatio(lambda_over_omega)))
    if (branch.admissible) out.push_back(branch);
  return out;
}

struct ExactnessResult {
  double operator_residual = 0.0;
  double pointwise = 0.0;
  int physical_draws = 0;
};

ExactnessResult exactness_suite(Rng& rng, int n, double fault) {
  ExactnessResult result;
  const double om = 1.0;
  for (int draw = 0; draw < 50; ++draw) {
    const double lam = rng.uniform(0.051, 0.449);
    const double eps = rng.uniform(-1.0, 1.0);
    const ModelParams params(0.0, eps, om, lam);
    for (const AlphaBranch& branch : admissible_branches(lam / om)) {
      const Complex a = branch.value;
      const Complex e = n == 0 ? ground_state_energy(a, params)
                               : first_excited_energy(a, params);
      const std::vector<Complex> roots =
          n == 0 ? std::vector<Complex>{} : std::vector<Complex>{Complex(0.0)};
      const Complex d2 = delta_squared(n, a, params, roots, e);

      OdeCoefficients c = ode_coefficients(params, a, e, d2);
      c.q2 += fault;
      const Polynomial phi = Polynomial::from_roots(roots);
      result.operator_residual =
          std::max(result.operator_residual,
                   residual_norm(apply_operator(c, phi)));

      // the untransformed-equation spot check needs a real delta
      if (std::abs(d2.imag()) < 1e-10 && d2.real() >= 0.0 &&
          std::abs(e.imag()) < 1e-10) {
        ++result.physical_draws;
        const ModelParams full(std::sqrt(d2.real()), eps, om, lam);
        for (int k = 0; k < 20; ++k) {
          const Complex z = rng.disc(2.0);
          const Complex raw =
              raw_residual_pointwise(full, e.real(), a, phi, z);
          const double weight = std::pow(1.0 + std::abs(z), n + 4);
          result.pointwise = std::max(result.pointwise, std::abs(raw) / weight);
        }
      }
    }
  }
  if (result.physical_draws == 0) {
    // nothing to spot-check would silently weaken the suite
    result.pointwise = 1.0;
  }
  return result;
}

double check_solver_equivalence() {
  const double om = 1.0, lam = 0.3, eps = 0.2;
  const auto branches = alpha_closed_form(LambdaRatio(lam / om));
  const AlphaBranch& branch = branches[2];  // real admissible at this ratio
  const ModelParams params(0.0, eps, om, lam);

  double worst = 0.0;
  for (int n = 1; n <= 4; ++n) {
    const Complex e = energy_level(n, branch.value, params);
    const OdeCoefficients c0 = ode_coefficients(params, branch.value, e);
    const BaeSolveResult solved = solve_bae(n, c0);
    if (solved.root_sets.empty()) return 1.0;

    int compared = 0;
    for (const auto& roots : solved.root_sets) {
      if (compared >= 4) break;
      const Complex d2 = delta_squared(n, branch.value, params, roots, e);
      const OdeCoefficients c =
          ode_coefficients(params, branch.value, e, d2);
      // only root sets that satisfy the sum constraint correspond to
      // closed operator identities
      if (std::abs(sum_constraint(roots, c)) > 1e-9) continue;
      ++compared;
      const auto null_sol = nullspace_oracle(n, c);
      if (!null_sol) {
        worst = std::max(worst, 1.0);
        continue;
      }
      double dist = 0.0;
      for (std::size_t k = 0; k < roots.size(); ++k)
        dist = std::max(dist, std::abs(roots[k] - null_sol->roots[k]));
      worst = std::max(worst, dist);
      for (const Complex& r : bae_residuals(null_sol->roots, c))
        worst = std::max(worst, std::abs(r) * 10.0);  // 1e-9 scaled to 1e-8
    }
    if (compared == 0) return 1.0;
  }
  return worst;
}

double check_fock_analytic() {
  const double om = 1.0, del = 0.4, eps = 0.3;
  const ModelParams params(del, eps, om, 0.0);
  const std::vector<double> eigs = spectrum(build_hamiltonian(params, 40));
  const double gap = std::sqrt(del * del + eps * eps);
  std::vector<double> analytic;
  for (int m = 0; m <= 6; ++m) {
    analytic.push_back(m * om - gap);
    analytic.push_back(m * om + gap);
  }
  std::sort(analytic.begin(), analytic.end());
  double worst = 0.0;
  for (int k = 0; k < 10; ++k)
    worst = std::max(worst, std::abs(eigs[k] - analytic[k]));
  return worst;
}

struct CheckSpec {
  const char* name;
  double threshold;
  std::function<double(Rng&, double)> run;
};

const std::vector<CheckSpec>& specs() {
  static const std::vector<CheckSpec> list = {
      {"identities", 1e-10,
       [](Rng& rng, double) { return check_identities(rng); }},
      {"alpha-oracle", 1e-8,
       [](Rng&, double) { return check_alpha_oracle(); }},
      {"alpha-residual", 1e-9,
       [](Rng&, double) { return check_alpha_residual(); }},
      {"alpha-vieta", 1e-10,
       [](Rng&, double) { return check_alpha_vieta(); }},
      {"gauge-reduction", 1e-14,
       [](Rng& rng, double) { return check_gauge_reduction(rng); }},
      {"gauge-pointwise", 1e-8,
       [](Rng& rng, double) { return check_gauge_pointwise(rng); }},
      {"n0-exactness", 1e-10,
       [](Rng& rng, double fault) {
         return exactness_suite(rng, 0, fault).operator_residual;
       }},
      {"n0-pointwise", 1e-8,
       [](Rng& rng, double fault) {
         return exactness_suite(rng, 0, fault).pointwise;
       }},
      {"n1-exactness", 1e-10,
       [](Rng& rng, double fault) {
         return exactness_suite(rng, 1, fault).operator_residual;
       }},
      {"n1-pointwise", 1e-8,
       [](Rng& rng, double fault) {
         return exactness_suite(rng, 1, fault).pointwise;
       }},
      {"solver-equivalence", 1e-8,
       [](Rng&, double) { return check_solver_equivalence(); }},
      {"fock-analytic", 1e-10,
       [](Rng&, double) { return check_fock_analytic(); }},
  };
  return list;
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> names;
  for (const auto& spec : specs()) names.emplace_back(spec.name);
  return names;
}

std::vector<CheckResult> run_checks(const CheckOptions& options) {
  if (options.only) {
    bool known = false;
    for (const auto& spec : specs())
      if (*options.only == spec.name) known = true;
    if (!known)
      throw InvalidParameter("unknown check name: " + *options.only);
  }

  std::vector<CheckResult> results;
  for (const auto& spec : specs()) {
    if (options.only && *options.only != spec.name) continue;
    Rng rng(options.rng_seed);
    CheckResult r;
    r.name = spec.name;
    r.threshold = spec.threshold;
    r.measured = spec.run(rng, options.inject_fault);
    r.pass = r.measured < r.threshold;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace tprabi
