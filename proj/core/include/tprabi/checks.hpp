#ifndef TPRABI_CHECKS_HPP
#define TPRABI_CHECKS_HPP

#include <optional>
#include <string>
#include <vector>

namespace tprabi {

struct CheckResult {
  std::string name;
  double measured = 0.0;   // worst observed value of the check's metric
  double threshold = 0.0;  // pass iff measured < threshold
  bool pass = false;
};

struct CheckOptions {
  // Run only the check with this name (empty = all).
  std::optional<std::string> only;
  // Magnitude added to the q2 coefficient inside the exactness checks;
  // nonzero values must trip them (sensitivity contract).
  double inject_fault = 0.0;
  // Deterministic seed for the randomized suites.
  std::uint64_t rng_seed = 20240917ull;
};

// The invariant suite behind the `verify` command: symmetric-sum identities,
// closed-form vs companion roots with the Vieta relations, the alpha = 0
// reduction, pointwise gauge consistency, n = 0 / n = 1 exactness, solver
// equivalence for n <= 4, and the analytic lambda = 0 spectrum.
// Throws InvalidParameter for an unknown `only` name.
std::vector<CheckResult> run_checks(const CheckOptions& options = {});

// Names accepted by CheckOptions::only, in execution order.
std::vector<std::string> check_names();

}  // namespace tprabi

#endif  // TPRABI_CHECKS_HPP
