#include "qrsp/game.hpp"

#include <cmath>
#include <stdexcept>

namespace qrsp {

PayoffMatrix PayoffMatrix::rsp() {
  PayoffMatrix m;
  m.alice = {{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.bob[i][j] = -m.alice[i][j];
  return m;
}

bool PayoffMatrix::is_zero_sum(double tol) const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (std::abs(alice[i][j] + bob[i][j]) > tol) return false;
  return true;
}

Matrix9 initial_state() {
  Matrix9 rho = Matrix9::Zero();
  for (int r : {0, 4, 8})
    for (int c : {0, 4, 8}) rho(r, c) = 1.0 / 3.0;
  return rho;
}

Matrix3 strategy_unitary(const StrategyParams& s) {
  const double half_pi = std::numbers::pi / 2.0;
  if (!(s.x >= 0.0 && s.x <= half_pi && s.y >= 0.0 && s.y <= half_pi)) {
    throw std::domain_error("strategy parameters must lie in [0, pi/2]");
  }
  const Complex i(0.0, 1.0);
  const Complex eix = std::exp(i * s.x);
  const Complex eiy = std::exp(i * s.y);
  const double cx = std::cos(s.x), sx = std::sin(s.x);
  const double cy = std::cos(s.y), sy = std::sin(s.y);
  Matrix3 u;
  u << eix * cy, i * eix * sy, 0.0,
       i * sy * cx, cx * cy, i * eiy * sx,
       -sy * sx, i * sx * cy, eiy * cx;
  // construction-time unitarity check
  if (max_abs_diff(u.adjoint() * u, Matrix3::Identity()) > 1e-12) {
    throw std::logic_error("strategy unitary failed U^dag U = I");
  }
  return u;
}

Matrix9 final_state(const Matrix9& noisy, const StrategyParams& a,
                    const StrategyParams& b) {
  const Matrix9 v = tensor(strategy_unitary(a), strategy_unitary(b));
  return v * noisy * v.adjoint();
}

Matrix9 payoff_operator(Player player, const PayoffMatrix& m) {
  const auto& entries = (player == Player::Alice) ? m.alice : m.bob;
  Matrix9 op = Matrix9::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) op(3 * i + j, 3 * i + j) = entries[i][j];
  return op;
}

PayoffResult payoff_from_noisy(const Matrix9& noisy, const StrategyParams& a,
                               const StrategyParams& b, const PayoffMatrix& m) {
  const Matrix9 rho = final_state(noisy, a, b);
  PayoffResult out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double d = rho(3 * i + j, 3 * i + j).real();
      out.alice += m.alice[i][j] * d;
      out.bob += m.bob[i][j] * d;
    }
  }
  return out;
}

PayoffResult payoff(const StrategyParams& a, const StrategyParams& b,
                    ChannelKind kind, double alpha, const PayoffMatrix& m) {
  const KrausSet lifted = lift_two_qutrit(make_kraus(kind, alpha));
  const Matrix9 noisy = apply_channel(initial_state(), lifted);
  return payoff_from_noisy(noisy, a, b, m);
}

PayoffResult classical_mixed_payoff(const std::array<double, 3>& p,
                                    const std::array<double, 3>& q,
                                    const PayoffMatrix& m) {
  auto on_simplex = [](const std::array<double, 3>& v) {
    double s = 0.0;
    for (double c : v) {
      if (c < -1e-12) return false;
      s += c;
    }
    return std::abs(s - 1.0) <= 1e-12;
  };
  if (!on_simplex(p) || !on_simplex(q)) {
    throw std::invalid_argument("mixed strategies must lie on the simplex");
  }
  PayoffResult out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      out.alice += p[i] * q[j] * m.alice[i][j];
      out.bob += p[i] * q[j] * m.bob[i][j];
    }
  }
  return out;
}

bool is_hermitian(const Matrix9& rho, double tol) {
  return max_abs_diff(rho, rho.adjoint()) <= tol;
}

bool is_unit_trace(const Matrix9& rho, double tol) {
  return std::abs(rho.trace() - Complex(1.0)) <= tol;
}

double min_eigenvalue(const Matrix9& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix9> solver(rho);
  return solver.eigenvalues().minCoeff();
}

}  // namespace qrsp
