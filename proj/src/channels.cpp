#include "qrsp/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace qrsp {

std::string to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::AmplitudeDamping: return "ad";
    case ChannelKind::PhaseDamping: return "pd";
    case ChannelKind::Depolarizing: return "dep";
    case ChannelKind::Noiseless: return "none";
  }
  return "?";
}

ChannelKind channel_from_string(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(c)));
  if (s == "ad") return ChannelKind::AmplitudeDamping;
  if (s == "pd") return ChannelKind::PhaseDamping;
  if (s == "dep") return ChannelKind::Depolarizing;
  if (s == "none") return ChannelKind::Noiseless;
  throw std::invalid_argument("unknown channel name: " + name);
}

namespace {

void require_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::domain_error("noise parameter alpha must lie in [0, 1]");
  }
}

void assert_complete(const KrausSet& k) {
  const double r = check_completeness(k);
  if (r > kCompletenessTol) {
    throw std::invalid_argument("Kraus set violates completeness, residual " +
                                std::to_string(r));
  }
}

}  // namespace

KrausSet amplitude_damping_kraus(double alpha) {
  require_alpha(alpha);
  Matrix3 e0 = Matrix3::Zero();
  e0(0, 0) = 1.0;
  e0(1, 1) = std::sqrt(1.0 - alpha);
  e0(2, 2) = std::sqrt(1.0 - alpha);
  Matrix3 e1 = Matrix3::Zero();
  e1(0, 1) = std::sqrt(alpha);
  Matrix3 e2 = Matrix3::Zero();
  e2(0, 2) = std::sqrt(alpha);
  KrausSet k{3, {e0, e1, e2}, alpha};
  assert_complete(k);
  return k;
}

KrausSet phase_damping_kraus(double alpha) {
  require_alpha(alpha);
  const Matrix3 e0 = std::sqrt(1.0 - alpha) * Matrix3::Identity();
  const Matrix3 e1 = std::sqrt(alpha) * phase_z();
  KrausSet k{3, {e0, e1}, alpha};
  assert_complete(k);
  return k;
}

KrausSet depolarizing_kraus(double alpha) {
  require_alpha(alpha);
  const Matrix3 y = shift_y();
  const Matrix3 z = phase_z();
  const std::vector<Matrix3> words = {y,     z,         y * y,     y * z,
                                      y * y * z, y * z * z, y * y * z * z, z * z};
  KrausSet k;
  k.dim = 3;
  k.alpha = alpha;
  k.operators.push_back(std::sqrt(1.0 - alpha) * Matrix3::Identity());
  const double w = std::sqrt(alpha / 8.0);
  for (const Matrix3& m : words) k.operators.push_back(w * m);
  assert_complete(k);
  return k;
}

KrausSet noiseless_kraus(double alpha) {
  require_alpha(alpha);
  return KrausSet{3, {Matrix3::Identity()}, alpha};
}

KrausSet make_kraus(ChannelKind kind, double alpha) {
  switch (kind) {
    case ChannelKind::AmplitudeDamping: return amplitude_damping_kraus(alpha);
    case ChannelKind::PhaseDamping: return phase_damping_kraus(alpha);
    case ChannelKind::Depolarizing: return depolarizing_kraus(alpha);
    case ChannelKind::Noiseless: return noiseless_kraus(alpha);
  }
  throw std::invalid_argument("bad channel kind");
}

KrausSet lift_two_qutrit(const KrausSet& k) {
  KrausSet lifted;
  lifted.dim = k.dim * k.dim;
  lifted.alpha = k.alpha;
  lifted.operators.reserve(k.operators.size() * k.operators.size());
  for (const MatrixX& a : k.operators) {
    for (const MatrixX& b : k.operators) {
      lifted.operators.push_back(tensor(a, b));
    }
  }
  return lifted;
}

double check_completeness(const KrausSet& k) {
  MatrixX sum = MatrixX::Zero(k.dim, k.dim);
  for (const MatrixX& e : k.operators) sum += e.adjoint() * e;
  return max_abs_diff(sum, MatrixX::Identity(k.dim, k.dim));
}

Matrix9 apply_channel(const Matrix9& rho, const KrausSet& k) {
  if (k.dim != 9) {
    throw std::invalid_argument("apply_channel expects a dim-9 Kraus set");
  }
  if (check_completeness(k) > kCompletenessTol) {
    throw std::invalid_argument("incomplete Kraus set passed to apply_channel");
  }
  Matrix9 out = Matrix9::Zero();
  for (const MatrixX& e : k.operators) out += e * rho * e.adjoint();
  return out;
}

}  // namespace qrsp
