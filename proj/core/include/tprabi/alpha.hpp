#ifndef TPRABI_ALPHA_HPP
#define TPRABI_ALPHA_HPP

#include <array>
#include <span>
#include <vector>

#include "tprabi/polynomial.hpp"
#include "tprabi/types.hpp"

namespace tprabi {

// One root alpha_i(Lambda) of the gauge quartic
//   (16 a^4 + 4 a^2 + 1) Lambda^2 - 4 a^2 + 2 a Lambda = 0,
// which kills the z^4 coefficient of the transformed operator.
struct AlphaBranch {
  int index;               // 1..4, sign convention of the closed form
  Complex value;           // dimensionless
  double quartic_residual; // |quartic(alpha)|
  bool admissible;         // |alpha| < 1/2 (Gaussian weight stays integrable)
};

// Value of the gauge quartic at alpha.
Complex gauge_quartic(LambdaRatio ratio, Complex alpha);

// Cube-root expression of the closed-form root chain (principal branch).
// Throws BranchPoint when |f| < 1e-12.
Complex f_of_lambda(LambdaRatio ratio);

// Square-root expression of the chain: h^2 * Lambda^2 * f =
// 2(-2 Lambda^2 f + f^2 + 2 f + 13 Lambda^4 - 2 Lambda^2 + 1).
// Throws BranchPoint when h vanishes.
Complex h_of_lambda(LambdaRatio ratio);

// The four closed-form roots, indices matching the sign convention
// (1,2 carry -h/(4 sqrt 6), 3,4 carry +h/(4 sqrt 6); odd indices take the
// negative inner square root). Principal branches are used and every
// candidate is validated by its quartic residual; if validation fails the
// values fall back to polished companion-matrix roots matched to the
// candidates, and ValidationFailure is thrown only if no assignment reaches
// residual < 1e-9.
std::array<AlphaBranch, 4> alpha_closed_form(LambdaRatio ratio);

// Branch-free oracle: all four roots as eigenvalues of the companion matrix
// of the monic quartic, polished by a few Newton steps. Residuals < 1e-10.
std::array<Complex, 4> alpha_companion(LambdaRatio ratio);

// Strict Gaussian-integrability bound |alpha| < 1/2.
bool admissible(Complex alpha);

// Truncated weighted norm
//   (1/pi) Int_{|z|<=R} |phi(z)|^2 exp(2 Re[alpha z^2] - |z|^2) d^2 z
// via a tensor polar grid (Gauss-Legendre radial x midpoint angular).
// Deterministic for fixed node counts.
double normalizability_integral(Complex alpha, const Polynomial& phi,
                                double radius, int radial_nodes = 400,
                                int angular_nodes = 256);

// Couplings in [lo, hi] where the gauge quartic has a multiple root
// (sign changes of its discriminant, refined by bisection).
std::vector<double> discriminant_zeros(double lo, double hi);

// Branch curves over a coupling grid, labeled by nearest-neighbor
// continuation between consecutive grid points (seeded from the closed-form
// order at the first point). Grid values must be nonzero.
std::vector<std::array<AlphaBranch, 4>> alpha_branch_curves(
    std::span<const double> lambda_grid);

}  // namespace tprabi

#endif  // TPRABI_ALPHA_HPP
