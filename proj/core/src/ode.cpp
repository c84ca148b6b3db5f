#include "tprabi/ode.hpp"

#include <cmath>

namespace tprabi {

OdeCoefficients ode_coefficients(const ModelParams& params, Complex alpha,
                                 Complex energy, Complex delta_squared) {
  if (params.lambda == 0.0)
    throw InvalidParameter(
        "ode_coefficients: lambda must be nonzero (equation is singular)");
  const double om = params.omega;
  const double lam = params.lambda;
  const double eps = params.epsilon;
  const Complex a = alpha;
  const Complex e = energy;
  const double lam2 = lam * lam;
  const double om2 = om * om;
  const Complex a2 = a * a;

  OdeCoefficients c;
  c.a1 = 8.0 * a;
  c.b2 = 24.0 * a2 - om2 / lam2 + 1.0;
  c.b0 = (12.0 * a * lam + e + 2.0 * om + eps) / lam;
  c.p3 = 32.0 * a2 * a + a * (4.0 - 4.0 * om2 / lam2) + om / lam;
  c.p1 = (4.0 * a * lam + om) * (12.0 * a * lam + e - om + eps) / lam2;
  c.q4 = (-4.0 * a2 * om2 + (16.0 * a2 * a2 + 4.0 * a2 + 1.0) * lam2 +
          2.0 * a * lam * om) /
         lam2;
  c.q2 = (2.0 * lam * (2.0 * a2 * eps + a * (2.0 * a * (12.0 * a * lam + e) + lam) + eps) -
          4.0 * a * om2 + 2.0 * om * (a * (4.0 * a * lam + e + eps) - lam)) /
         lam2;
  c.q0 = (2.0 * lam * (a * (6.0 * a * lam + e + 2.0 * om) + lam) +
          2.0 * a * lam * eps - delta_squared - e * e + eps * eps) /
         lam2;
  return c;
}

OdeCoefficients ode_coefficients(const ModelParams& params, Complex alpha,
                                 Complex energy) {
  return ode_coefficients(params, alpha, energy,
                          Complex(params.delta * params.delta));
}

namespace {

// result += scale * z^shift * p
void add_shifted(std::vector<Complex>& result, const Polynomial& p, int shift,
                 Complex scale) {
  const auto& c = p.coeffs();
  if (result.size() < c.size() + shift) result.resize(c.size() + shift, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) result[k + shift] += scale * c[k];
}

}  // namespace

Polynomial apply_operator(const OdeCoefficients& c, const Polynomial& phi) {
  const Polynomial d1 = phi.derivative();
  const Polynomial d2 = d1.derivative();
  const Polynomial d3 = d2.derivative();
  const Polynomial d4 = d3.derivative();

  std::vector<Complex> acc;
  add_shifted(acc, d4, 0, 1.0);
  add_shifted(acc, d3, 1, c.a1);
  add_shifted(acc, d2, 2, c.b2);
  add_shifted(acc, d2, 0, c.b0);
  add_shifted(acc, d1, 3, c.p3);
  add_shifted(acc, d1, 1, c.p1);
  add_shifted(acc, phi, 4, c.q4);
  add_shifted(acc, phi, 2, c.q2);
  add_shifted(acc, phi, 0, c.q0);
  return Polynomial(std::move(acc));
}

double residual_norm(const Polynomial& p) {
  const double m = p.max_abs_coeff();
  return m / (1.0 + m);
}

std::array<Complex, 5> gauged_derivatives(Complex alpha, const Polynomial& phi,
                                          Complex z) {
  const Polynomial d1p = phi.derivative();
  const Polynomial d2p = d1p.derivative();
  const Polynomial d3p = d2p.derivative();
  const Polynomial d4p = d3p.derivative();
  const Complex p0 = phi.eval(z);
  const Complex p1 = d1p.eval(z);
  const Complex p2 = d2p.eval(z);
  const Complex p3 = d3p.eval(z);
  const Complex p4 = d4p.eval(z);

  const Complex a = alpha;
  const Complex a2 = a * a, a3 = a2 * a, a4 = a2 * a2;
  const Complex z2 = z * z, z3 = z2 * z, z4 = z2 * z2;
  return {
      p0,
      p1 + 2.0 * a * z * p0,
      p2 + 4.0 * a * z * p1 + (2.0 * a + 4.0 * a2 * z2) * p0,
      p3 + 6.0 * a * z * p2 + (6.0 * a + 12.0 * a2 * z2) * p1 +
          (12.0 * a2 * z + 8.0 * a3 * z3) * p0,
      p4 + 8.0 * a * z * p3 + (12.0 * a + 24.0 * a2 * z2) * p2 +
          (48.0 * a2 * z + 32.0 * a3 * z3) * p1 +
          (12.0 * a2 + 48.0 * a3 * z2 + 16.0 * a4 * z4) * p0,
  };
}

Complex raw_residual_pointwise(const ModelParams& params, Complex energy,
                               Complex alpha, const Polynomial& phi,
                               Complex z) {
  if (params.lambda == 0.0)
    throw InvalidParameter("raw_residual_pointwise: lambda must be nonzero");
  const double om = params.omega;
  const double lam = params.lambda;
  const double eps = params.epsilon;
  const double del = params.delta;
  const Complex e = energy;
  const double lam2 = lam * lam;
  const double om2 = om * om;

  const auto g = gauged_derivatives(alpha, phi, z);
  const Complex z2 = z * z, z3 = z2 * z, z4 = z2 * z2;
  const Complex value =
      g[4] + ((2.0 * om + eps + e) / lam + (1.0 - om2 / lam2) * z2) * g[2] +
      ((om * (eps + e) - om2) / lam2 * z + om / lam * z3) * g[1] +
      ((2.0 * lam2 + eps * eps - e * e - del * del) / lam2 +
       2.0 * (eps - om) / lam * z2 + z4) *
          g[0];
  return std::exp(alpha * z2) * value;
}

}  // namespace tprabi
