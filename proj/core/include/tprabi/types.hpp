#ifndef TPRABI_TYPES_HPP
#define TPRABI_TYPES_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace tprabi {

using Complex = std::complex<double>;

// Base class for every recoverable condition raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Construction-time rejection of unusable physical parameters or grids.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Two roots coincide within tolerance; pole-based expressions are undefined.
class DegenerateRoots : public Error {
 public:
  using Error::Error;
};

// f or h of the closed-form root expressions vanishes; the radical chain
// divides by zero at this coupling ratio.
class BranchPoint : public Error {
 public:
  using Error::Error;
};

// Closed-form candidates failed the defining-equation residual check.
class ValidationFailure : public Error {
 public:
  using Error::Error;
};

// Denominator of the closed-form energy is numerically zero.
class SingularDenominator : public Error {
 public:
  using Error::Error;
};

class InvalidTruncation : public Error {
 public:
  using Error::Error;
};

// The candidate eigenvalue keeps moving between the two largest truncations;
// no match verdict can be issued.
class TruncationUnstable : public Error {
 public:
  using Error::Error;
};

// Dimensionless coupling ratio lambda/omega.
struct LambdaRatio {
  double value;

  explicit LambdaRatio(double v) : value(v) {
    if (!std::isfinite(v) || v == 0.0)
      throw InvalidParameter("LambdaRatio must be finite and nonzero");
  }
};

// Physical parameters of the two-level/boson Hamiltonian
//   H = delta*sigma_x + epsilon*sigma_z + omega*n_hat
//     + lambda*sigma_z*(creation^2 + annihilation^2).
// All four are energies (hbar = 1). lambda = 0 is a valid Hamiltonian (the
// matrix oracle uses it for its analytic checks); the differential-operator
// layer rejects it at construction since its coefficients divide by lambda.
struct ModelParams {
  double delta;    // level-splitting half-width
  double epsilon;  // asymmetry (bias) strength
  double omega;    // bosonic mode frequency
  double lambda;   // two-photon coupling

  ModelParams(double delta_, double epsilon_, double omega_, double lambda_)
      : delta(delta_), epsilon(epsilon_), omega(omega_), lambda(lambda_) {
    if (!(std::isfinite(delta) && std::isfinite(epsilon) &&
          std::isfinite(omega) && std::isfinite(lambda)))
      throw InvalidParameter("ModelParams: parameters must be finite");
    if (omega <= 0.0)
      throw InvalidParameter("ModelParams: omega must be positive");
  }

  LambdaRatio lambda_ratio() const { return LambdaRatio(lambda / omega); }
};

}  // namespace tprabi

#endif  // TPRABI_TYPES_HPP
