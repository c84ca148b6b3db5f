#ifndef TPRABI_ODE_HPP
#define TPRABI_ODE_HPP

#include <array>

#include "tprabi/polynomial.hpp"
#include "tprabi/types.hpp"

namespace tprabi {

// Coefficients of the fourth-order operator
//   L[phi] = phi'''' + a1 z phi''' + (b2 z^2 + b0) phi''
//          + (p3 z^3 + p1 z) phi' + (q4 z^4 + q2 z^2 + q0) phi,
// obtained from the untransformed equation by the substitution
// phi1(z) = exp(alpha z^2) phi(z). All entries are dimensionless.
struct OdeCoefficients {
  Complex a1;
  Complex b2;
  Complex b0;
  Complex p3;
  Complex p1;
  Complex q4;
  Complex q2;
  Complex q0;
};

// Coefficients for the given gauge exponent and energy; delta enters only
// through q0. At alpha = 0 the untransformed coefficient set is recovered
// exactly; at a root of the gauge quartic |q4| < 1e-9.
OdeCoefficients ode_coefficients(const ModelParams& params, Complex alpha,
                                 Complex energy);

// Same, with delta^2 continued off the real axis. Candidate states whose
// required delta^2 is complex are still exact solutions of the operator
// equation; this overload lets the solver verify them.
OdeCoefficients ode_coefficients(const ModelParams& params, Complex alpha,
                                 Complex energy, Complex delta_squared);

// L[phi], exactly in coefficient space (shift-and-scale, no sampling).
// Degree <= deg(phi) + 4, and <= deg(phi) + 2 when q4 = 0 and deg(phi) >= 1.
Polynomial apply_operator(const OdeCoefficients& c, const Polynomial& phi);

// Scale-normalized solvability measure: m/(1+m) where m is the largest
// coefficient magnitude. Behaves like m near zero, where the thresholds live.
double residual_norm(const Polynomial& p);

// Derivatives of phi1 = exp(alpha z^2) phi at z, orders 0..4, each divided
// by the common factor exp(alpha z^2) (product rule expanded analytically).
std::array<Complex, 5> gauged_derivatives(Complex alpha, const Polynomial& phi,
                                          Complex z);

// Residual of the untransformed fourth-order equation at z for
// phi1 = exp(alpha z^2) phi, with the product-rule expansion of the
// derivatives carried out analytically.
Complex raw_residual_pointwise(const ModelParams& params, Complex energy,
                               Complex alpha, const Polynomial& phi,
                               Complex z);

}  // namespace tprabi

#endif  // TPRABI_ODE_HPP
