#pragma once

#include <string>
#include <vector>

#include "qrsp/linalg.hpp"

namespace qrsp {

enum class ChannelKind { AmplitudeDamping, PhaseDamping, Depolarizing, Noiseless };

std::string to_string(ChannelKind kind);
ChannelKind channel_from_string(const std::string& name);

/// Ordered set of Kraus operators, all of dimension `dim`, built for the
/// noise parameter `alpha`. Constructors assert the completeness relation
/// sum_k E_k^dag E_k = I to within 1e-12.
struct KrausSet {
  int dim = 3;
  std::vector<MatrixX> operators;
  double alpha = 0.0;
};

inline constexpr double kCompletenessTol = 1e-12;

/// Amplitude damping: E0 = diag(1, sqrt(1-a), sqrt(1-a)); E1, E2 send
/// |1>, |2> to sqrt(a)|0>. Throws std::domain_error for alpha outside [0,1].
KrausSet amplitude_damping_kraus(double alpha);

/// Phase damping: E0 = sqrt(1-a) I, E1 = sqrt(a) diag(1, w, w^2).
KrausSet phase_damping_kraus(double alpha);

/// Depolarizing: E0 = sqrt(1-a) I plus sqrt(a/8) W for the eight words
/// W in {Y, Z, Y^2, YZ, Y^2 Z, Y Z^2, Y^2 Z^2, Z^2}, in that order.
KrausSet depolarizing_kraus(double alpha);

/// Identity channel, a single I3 operator.
KrausSet noiseless_kraus(double alpha = 0.0);

KrausSet make_kraus(ChannelKind kind, double alpha);

/// Lift a single-qutrit set to the two-qutrit space: all ordered pairs
/// E_i (x) E_j, n^2 operators.
KrausSet lift_two_qutrit(const KrausSet& k);

/// Max-absolute entry of (sum_k E_k^dag E_k - I).
double check_completeness(const KrausSet& k);

/// Apply a dim-9 Kraus set to a two-qutrit state: rho -> sum_k E_k rho E_k^dag.
/// Throws std::invalid_argument if the set does not satisfy completeness.
Matrix9 apply_channel(const Matrix9& rho, const KrausSet& k);

}  // namespace qrsp
