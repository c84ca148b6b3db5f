#ifndef TPRABI_FOCK_HPP
#define TPRABI_FOCK_HPP

#include <span>
#include <vector>

#include "tprabi/types.hpp"

namespace tprabi {

// Truncated number-basis matrix of the sigma_z-coupled Hamiltonian.
// Basis ordering is fixed (and bit-comparable across runs): m-major,
// spin-minor, index = 2*m + s with s = 0 for spin up, 1 for spin down.
struct FockMatrix {
  int truncation = 0;  // N, largest boson number kept
  int dim = 0;         // 2*(N+1)
  std::vector<double> entries;  // row-major, real symmetric

  double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * dim + j]; }
  double& at(int i, int j) { return entries[static_cast<std::size_t>(i) * dim + j]; }
};

// Assemble the Hamiltonian in the truncated basis: diagonal m*omega +/- eps,
// delta between the two spins at equal m, +/- lambda*sqrt((m+1)(m+2)) between
// m and m+2 at equal spin (sign by spin). Throws InvalidTruncation for N < 4.
FockMatrix build_hamiltonian(const ModelParams& params, int truncation);

// Eigenvalues in ascending order (dense symmetric solve).
std::vector<double> spectrum(const FockMatrix& m);

struct LevelMatch {
  bool matched = false;
  double nearest = 0.0;    // nearest eigenvalue at the largest truncation
  int truncation_used = 0;
};

// Truncation-ladder protocol: diagonalize at each rung; the level matches if
// the nearest eigenvalue is within tol of the energy at the two largest
// truncations and moves by less than tol/10 between them. Throws
// TruncationUnstable when a within-tol candidate keeps moving, and
// InvalidParameter when lambda/omega >= 1/2 (discrete spectrum is lost at
// the collapse coupling, truncated eigenvalues stop converging).
LevelMatch converged_level_match(const ModelParams& params, double energy,
                                 double tol,
                                 std::span<const int> ladder = {});

}  // namespace tprabi

#endif  // TPRABI_FOCK_HPP
