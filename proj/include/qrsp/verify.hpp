#pragma once

#include <random>
#include <string>
#include <vector>

#include "qrsp/game.hpp"

namespace qrsp {

struct CheckResult {
  std::string name;
  bool asserted = true;  ///< false for measured-only entries
  bool pass = true;
  double value = 0.0;  ///< residual / deviation / recorded number
  std::string detail;

  bool ok() const { return pass || !asserted; }
};

/// Random density matrix (Hermitian, unit trace, PSD), deterministic in rng.
Matrix9 random_density(std::mt19937& rng);

/// Uniform strategy parameters in [0, pi/2]^2.
StrategyParams random_strategy(std::mt19937& rng);

/// The full invariant suite behind the `verify` command: Kraus completeness,
/// strategy unitarity, trace/Hermiticity/positivity preservation, zero-sum,
/// alpha=0 channel equivalence, the figure-1 qualitative checks, and the
/// alpha=1 record (asserted for amplitude damping, measured for
/// depolarizing).
std::vector<CheckResult> run_verification();

}  // namespace qrsp
