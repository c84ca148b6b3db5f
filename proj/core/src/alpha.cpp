#include "tprabi/alpha.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace tprabi {

namespace {

constexpr double kBranchPointTol = 1e-12;
constexpr double kClosedFormResidualTol = 1e-9;

// Ascending coefficients of the gauge quartic in alpha:
// 16 L^2 a^4 + (4 L^2 - 4) a^2 + 2 L a + L^2.
std::array<double, 5> quartic_coeffs(double L) {
  return {L * L, 2.0 * L, 4.0 * L * L - 4.0, 0.0, 16.0 * L * L};
}

Complex quartic_derivative(double L, Complex a) {
  return 64.0 * L * L * a * a * a + 2.0 * (4.0 * L * L - 4.0) * a + 2.0 * L;
}

Complex newton_polish(double L, Complex a, int steps) {
  for (int s = 0; s < steps; ++s) {
    const Complex d = quartic_derivative(L, a);
    if (std::abs(d) < 1e-14) break;
    a -= gauge_quartic(LambdaRatio(L), a) / d;
  }
  return a;
}

Complex radicand(double L) {
  const double L2 = L * L, L4 = L2 * L2, L6 = L4 * L2, L8 = L4 * L4;
  const Complex inner =
      -L4 * (144.0 * L8 + 332.0 * L6 - 191.0 * L4 - 76.0 * L2 + 20.0);
  return -35.0 * L6 + 93.0 * L4 / 2.0 + 3.0 * L2 - 1.0 +
         1.5 * std::sqrt(3.0) * std::sqrt(inner);
}

Complex f_from_lambda(double L) {
  const Complex f = std::pow(radicand(L), 1.0 / 3.0);
  if (std::abs(f) < kBranchPointTol)
    throw BranchPoint("f(Lambda) vanishes; root chain divides by zero");
  return f;
}

Complex h_from_f(double L, Complex f) {
  const double L2 = L * L, L4 = L2 * L2;
  const Complex h = std::sqrt(
      2.0 * (-2.0 * L2 * f + f * f + 2.0 * f + 13.0 * L4 - 2.0 * L2 + 1.0) /
      (L2 * f));
  if (std::abs(h) < kBranchPointTol)
    throw BranchPoint("h(Lambda) vanishes; root formulas divide by zero");
  return h;
}

// Assign indices 1..4 by a minimum-total-displacement permutation of
// `values` against `reference`.
std::array<Complex, 4> match_to_reference(
    const std::array<Complex, 4>& values,
    const std::array<Complex, 4>& reference) {
  std::array<int, 4> perm = {0, 1, 2, 3};
  std::array<int, 4> best = perm;
  double best_cost = -1.0;
  do {
    double cost = 0.0;
    for (int k = 0; k < 4; ++k) cost += std::abs(values[perm[k]] - reference[k]);
    if (best_cost < 0.0 || cost < best_cost) {
      best_cost = cost;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::array<Complex, 4> out;
  for (int k = 0; k < 4; ++k) out[k] = values[best[k]];
  return out;
}

AlphaBranch make_branch(int index, double L, Complex value) {
  return AlphaBranch{index, value,
                     std::abs(gauge_quartic(LambdaRatio(L), value)),
                     admissible(value)};
}

// Quartic discriminant for leading..constant (a4, 0, a2, a1, a0).
double quartic_discriminant(double L) {
  const auto c = quartic_coeffs(L);
  const double a0 = c[0], a1 = c[1], a2 = c[2], a4 = c[4];
  const double a4_2 = a4 * a4;
  return 256.0 * a4_2 * a4 * a0 * a0 * a0 - 128.0 * a4_2 * a2 * a2 * a0 * a0 +
         144.0 * a4_2 * a2 * a1 * a1 * a0 - 27.0 * a4_2 * a1 * a1 * a1 * a1 +
         16.0 * a4 * a2 * a2 * a2 * a2 * a0 - 4.0 * a4 * a2 * a2 * a2 * a1 * a1;
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

}  // namespace

Complex gauge_quartic(LambdaRatio ratio, Complex a) {
  const double L = ratio.value;
  const Complex a2 = a * a;
  return (16.0 * a2 * a2 + 4.0 * a2 + 1.0) * (L * L) - 4.0 * a2 + 2.0 * a * L;
}

Complex f_of_lambda(LambdaRatio ratio) { return f_from_lambda(ratio.value); }

Complex h_of_lambda(LambdaRatio ratio) {
  return h_from_f(ratio.value, f_from_lambda(ratio.value));
}

std::array<Complex, 4> alpha_companion(LambdaRatio ratio) {
  const double L = ratio.value;
  const auto c = quartic_coeffs(L);
  Eigen::Matrix4d companion = Eigen::Matrix4d::Zero();
  companion(1, 0) = companion(2, 1) = companion(3, 2) = 1.0;
  for (int k = 0; k < 4; ++k) companion(k, 3) = -c[k] / c[4];
  const Eigen::Vector4cd eig = companion.eigenvalues();
  std::array<Complex, 4> roots;
  for (int k = 0; k < 4; ++k)
    roots[k] = newton_polish(L, Complex(eig(k).real(), eig(k).imag()), 3);
  // canonical order for reproducibility
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

std::array<AlphaBranch, 4> alpha_closed_form(LambdaRatio ratio) {
  const double L = ratio.value;
  const double L2 = L * L, L4 = L2 * L2;
  const Complex f = f_from_lambda(L);
  const Complex h = h_from_f(L, f);
  const Complex g = 4.0 * (L2 - 1.0) * f + f * f + 13.0 * L4 - 2.0 * L2 + 1.0;
  const double s6 = std::sqrt(6.0);
  const Complex x_plus = (6.0 * s6 * L * f - h * g) / (48.0 * L2 * f * h);
  const Complex x_minus = (-6.0 * s6 * L * f - h * g) / (48.0 * L2 * f * h);
  const Complex base = h / (4.0 * s6);
  const std::array<Complex, 4> candidates = {
      -base - std::sqrt(x_plus), -base + std::sqrt(x_plus),
      base - std::sqrt(x_minus), base + std::sqrt(x_minus)};

  bool valid = true;
  for (const Complex& a : candidates)
    valid = valid &&
            std::abs(gauge_quartic(ratio, a)) < kClosedFormResidualTol;

  std::array<Complex, 4> values = candidates;
  if (!valid) {
    // principal branches failed; keep the companion roots, labeled by
    // proximity to the candidates
    const auto oracle = alpha_companion(ratio);
    std::array<Complex, 4> pool = {oracle[0], oracle[1], oracle[2], oracle[3]};
    values = match_to_reference(pool, candidates);
    for (const Complex& a : values)
      if (std::abs(gauge_quartic(ratio, a)) >= kClosedFormResidualTol)
        throw ValidationFailure(
            "closed-form roots failed validation and companion fallback "
            "did not reach tolerance");
  }

  return {make_branch(1, L, values[0]), make_branch(2, L, values[1]),
          make_branch(3, L, values[2]), make_branch(4, L, values[3])};
}

bool admissible(Complex alpha) { return std::abs(alpha) < 0.5; }

double normalizability_integral(Complex alpha, const Polynomial& phi,
                                double radius, int radial_nodes,
                                int angular_nodes) {
  if (radius <= 0.0) throw InvalidParameter("radius must be positive");
  if (radial_nodes < 2 || angular_nodes < 4)
    throw InvalidParameter("quadrature needs at least 2 x 4 nodes");

  std::vector<double> gl_nodes, gl_weights;
  gauss_legendre(radial_nodes, gl_nodes, gl_weights);

  const double dtheta = 2.0 * std::numbers::pi / angular_nodes;
  double total = 0.0;
  for (int i = 0; i < radial_nodes; ++i) {
    const double r = 0.5 * radius * (gl_nodes[i] + 1.0);
    const double wr = 0.5 * radius * gl_weights[i];
    double ring = 0.0;
    for (int j = 0; j < angular_nodes; ++j) {
      const double theta = (j + 0.5) * dtheta;
      const Complex z = std::polar(r, theta);
      const double expo = 2.0 * (alpha * z * z).real() - r * r;
      const double mag = std::abs(phi.eval(z));
      ring += mag * mag * std::exp(expo);
    }
    total += wr * r * ring * dtheta;
  }
  return total / std::numbers::pi;
}

std::vector<double> discriminant_zeros(double lo, double hi) {
  if (!(lo > 0.0) || !(hi > lo))
    throw InvalidParameter("discriminant_zeros needs 0 < lo < hi");
  const int samples = 4000;
  std::vector<double> zeros;
  double prev_x = lo, prev_d = quartic_discriminant(lo);
  for (int i = 1; i <= samples; ++i) {
    const double x = lo + (hi - lo) * i / samples;
    const double d = quartic_discriminant(x);
    if ((prev_d < 0.0) != (d < 0.0)) {
      double a = prev_x, b = x;
      for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (a + b);
        if ((quartic_discriminant(a) < 0.0) != (quartic_discriminant(mid) < 0.0))
          b = mid;
        else
          a = mid;
      }
      zeros.push_back(0.5 * (a + b));
    }
    prev_x = x;
    prev_d = d;
  }
  return zeros;
}

std::vector<std::array<AlphaBranch, 4>> alpha_branch_curves(
    std::span<const double> lambda_grid) {
  std::vector<std::array<AlphaBranch, 4>> rows;
  rows.reserve(lambda_grid.size());
  std::array<Complex, 4> previous{};
  bool have_previous = false;
  for (double L : lambda_grid) {
    const LambdaRatio ratio(L);
    std::array<Complex, 4> values;
    try {
      const auto closed = alpha_closed_form(ratio);
      for (int k = 0; k < 4; ++k) values[k] = closed[k].value;
    } catch (const Error&) {
      const auto oracle = alpha_companion(ratio);
      values = {oracle[0], oracle[1], oracle[2], oracle[3]};
    }
    if (have_previous) values = match_to_reference(values, previous);
    previous = values;
    have_previous = true;
    rows.push_back({make_branch(1, L, values[0]), make_branch(2, L, values[1]),
                    make_branch(3, L, values[2]),
                    make_branch(4, L, values[3])});
  }
  return rows;
}

}  // namespace tprabi
