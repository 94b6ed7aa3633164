#pragma once

#include <array>

#include "qrsp/channels.hpp"
#include "qrsp/linalg.hpp"

namespace qrsp {

enum class Player { Alice, Bob };

/// A player's strategy parameters (x, y), both in [0, pi/2].
struct StrategyParams {
  double x = 0.0;
  double y = 0.0;
};

struct PayoffResult {
  double alice = 0.0;
  double bob = 0.0;
};

/// 3x3 grid of (alice, bob) payoff pairs. Row index is Alice's classical
/// strategy (R, S, P), column is Bob's. The default instance is the
/// standard zero-sum rock-scissors-paper table.
struct PayoffMatrix {
  std::array<std::array<double, 3>, 3> alice{};
  std::array<std::array<double, 3>, 3> bob{};

  static PayoffMatrix rsp();
  bool is_zero_sum(double tol = 1e-12) const;
};

/// The shared maximally entangled state (|00> + |11> + |22>)/sqrt(3) as a
/// density matrix: 1/3 at every (r, c) with r, c in {0, 4, 8}.
Matrix9 initial_state();

/// The strategy unitary U(x, y). Unitary by construction; the result is
/// checked against U^dag U = I at build time. Throws std::domain_error for
/// parameters outside [0, pi/2].
Matrix3 strategy_unitary(const StrategyParams& s);

/// (U_A (x) U_B) rho (U_A^dag (x) U_B^dag).
Matrix9 final_state(const Matrix9& noisy, const StrategyParams& a,
                    const StrategyParams& b);

/// Diagonal 9x9 payoff observable: entry 3i+j is the requested player's
/// payoff for the classical outcome (i, j).
Matrix9 payoff_operator(Player player, const PayoffMatrix& m);

/// Full pipeline: initial state -> lifted channel at alpha -> strategies ->
/// trace against both payoff operators.
PayoffResult payoff(const StrategyParams& a, const StrategyParams& b,
                    ChannelKind kind, double alpha, const PayoffMatrix& m);

/// Same pipeline but with the noisy state already prepared and the lifted
/// channel applied; used by sweeps and equilibrium search to avoid
/// rebuilding the channel per grid point.
PayoffResult payoff_from_noisy(const Matrix9& noisy, const StrategyParams& a,
                               const StrategyParams& b, const PayoffMatrix& m);

/// Classical bilinear expectation sum_ij p_i q_j $_ij. Throws
/// std::invalid_argument unless p and q lie on the probability simplex.
PayoffResult classical_mixed_payoff(const std::array<double, 3>& p,
                                    const std::array<double, 3>& q,
                                    const PayoffMatrix& m);

/// Validity helpers for density matrices.
bool is_hermitian(const Matrix9& rho, double tol = 1e-12);
bool is_unit_trace(const Matrix9& rho, double tol = 1e-12);
double min_eigenvalue(const Matrix9& rho);

}  // namespace qrsp
