#include <doctest.h>

#include <random>

#include "qrsp/channels.hpp"
#include "qrsp/game.hpp"
#include "qrsp/verify.hpp"

using namespace qrsp;

namespace {

const std::vector<double> kAlphas = {0.0, 0.25, 0.5, 0.75, 1.0};

Matrix9 basis_projector9(int index) {
  Matrix9 p = Matrix9::Zero();
  p(index, index) = 1.0;
  return p;
}

}  // namespace

TEST_CASE("amplitude damping construction") {
  const KrausSet k0 = amplitude_damping_kraus(0.0);
  REQUIRE(k0.operators.size() == 3);
  CHECK(max_abs_diff(k0.operators[0], Matrix3::Identity()) == 0.0);
  CHECK(k0.operators[1].cwiseAbs().maxCoeff() == 0.0);
  CHECK(k0.operators[2].cwiseAbs().maxCoeff() == 0.0);

  const KrausSet k1 = amplitude_damping_kraus(1.0);
  Matrix3 e0 = Matrix3::Zero();
  e0(0, 0) = 1.0;
  CHECK(max_abs_diff(k1.operators[0], e0) == 0.0);
  CHECK(std::abs(k1.operators[1](0, 1) - Complex(1.0)) == 0.0);
  CHECK(std::abs(k1.operators[2](0, 2) - Complex(1.0)) == 0.0);

  for (double a : kAlphas) CHECK(check_completeness(amplitude_damping_kraus(a)) < 1e-12);
  CHECK_THROWS_AS(amplitude_damping_kraus(-0.1), std::domain_error);
  CHECK_THROWS_AS(amplitude_damping_kraus(1.1), std::domain_error);
}

TEST_CASE("phase damping construction") {
  const KrausSet k = phase_damping_kraus(0.7);
  REQUIRE(k.operators.size() == 2);
  CHECK(max_abs_diff(k.operators[0],
                     (std::sqrt(0.3) * Matrix3::Identity()).eval()) < 1e-15);
  CHECK(max_abs_diff(k.operators[1], (std::sqrt(0.7) * phase_z()).eval()) < 1e-15);
  for (double a : kAlphas) CHECK(check_completeness(phase_damping_kraus(a)) < 1e-12);
  CHECK_THROWS_AS(phase_damping_kraus(2.0), std::domain_error);
}

TEST_CASE("depolarizing construction") {
  const KrausSet k0 = depolarizing_kraus(0.0);
  REQUIRE(k0.operators.size() == 9);
  CHECK(max_abs_diff(k0.operators[0], Matrix3::Identity()) == 0.0);
  for (int i = 1; i < 9; ++i) CHECK(k0.operators[i].cwiseAbs().maxCoeff() == 0.0);

  // word order: Y, Z, Y^2, YZ, Y^2Z, YZ^2, Y^2Z^2, Z^2
  const Matrix3 y = shift_y(), z = phase_z();
  const std::vector<Matrix3> words = {y,         z,         y * y,
                                      y * z,     y * y * z, y * z * z,
                                      y * y * z * z, z * z};
  const KrausSet k = depolarizing_kraus(0.4);
  const double w = std::sqrt(0.4 / 8.0);
  for (int i = 0; i < 8; ++i)
    CHECK(max_abs_diff(k.operators[i + 1], (w * words[i]).eval()) < 1e-15);

  for (double a : kAlphas) CHECK(check_completeness(depolarizing_kraus(a)) < 1e-12);
  CHECK_THROWS_AS(depolarizing_kraus(-1.0), std::domain_error);
}

TEST_CASE("depolarizing at alpha=1: per-qutrit transitions stay 1/4, shift 3/8") {
  // 2 of 8 words are Z-type (diagonal), 6 are Y-type shifts (3 each way)
  const KrausSet k = depolarizing_kraus(1.0);
  for (int basis = 0; basis < 3; ++basis) {
    Matrix3 p = Matrix3::Zero();
    p(basis, basis) = 1.0;
    Matrix3 out = Matrix3::Zero();
    for (const MatrixX& e : k.operators) out += (e * p * e.adjoint()).eval();
    for (int d = 0; d < 3; ++d) {
      const double expected = (d == basis) ? 0.25 : 0.375;
      CHECK(std::abs(out(d, d).real() - expected) < 1e-12);
    }
  }
}

TEST_CASE("lifting to the two-qutrit space") {
  const KrausSet none = lift_two_qutrit(noiseless_kraus());
  REQUIRE(none.operators.size() == 1);
  CHECK(max_abs_diff(none.operators[0], Matrix9::Identity()) == 0.0);

  const KrausSet ad = lift_two_qutrit(amplitude_damping_kraus(0.3));
  CHECK(ad.operators.size() == 9);
  CHECK(check_completeness(ad) < 1e-12);

  const KrausSet dep = lift_two_qutrit(depolarizing_kraus(0.6));
  CHECK(dep.operators.size() == 81);
  CHECK(check_completeness(dep) < 1e-12);

  // depolarizing is unital: the maximally mixed state is a fixed point
  const Matrix9 mixed = Matrix9::Identity() / 9.0;
  CHECK(max_abs_diff(apply_channel(mixed, dep), mixed) < 1e-12);
}

TEST_CASE("check_completeness flags a deliberately incomplete set") {
  KrausSet bad{3, {std::sqrt(0.5) * Matrix3::Identity()}, 0.0};
  CHECK(check_completeness(bad) == doctest::Approx(0.5).epsilon(1e-12));
  KrausSet bad9{9, {std::sqrt(0.5) * Matrix9::Identity()}, 0.0};
  CHECK_THROWS_AS(apply_channel(initial_state(), bad9), std::invalid_argument);
}

TEST_CASE("channel application examples") {
  const Matrix9 rho0 = initial_state();

  // noiseless leaves any state unchanged
  std::mt19937 rng(99);
  const KrausSet none = lift_two_qutrit(noiseless_kraus());
  for (int i = 0; i < 5; ++i) {
    const Matrix9 rho = random_density(rng);
    CHECK(max_abs_diff(apply_channel(rho, none), rho) < 1e-14);
  }

  // full damping sends the entangled state to |00><00|
  const KrausSet ad1 = lift_two_qutrit(amplitude_damping_kraus(1.0));
  CHECK(max_abs_diff(apply_channel(rho0, ad1), basis_projector9(0)) < 1e-12);

  // phase damping preserves every diagonal entry
  for (double a : kAlphas) {
    const KrausSet pd = lift_two_qutrit(phase_damping_kraus(a));
    for (int i = 0; i < 3; ++i) {
      const Matrix9 rho = random_density(rng);
      const Matrix9 out = apply_channel(rho, pd);
      for (int d = 0; d < 9; ++d) CHECK(std::abs(out(d, d) - rho(d, d)) < 1e-12);
    }
    const Matrix9 out0 = apply_channel(rho0, pd);
    for (int d : {0, 4, 8}) CHECK(std::abs(out0(d, d) - Complex(1.0 / 3.0)) < 1e-12);
  }
}

TEST_CASE("trace, hermiticity and positivity preservation") {
  std::mt19937 rng(7);
  for (ChannelKind kind : {ChannelKind::AmplitudeDamping,
                           ChannelKind::PhaseDamping, ChannelKind::Depolarizing}) {
    for (int ia = 0; ia <= 10; ++ia) {
      const KrausSet lifted = lift_two_qutrit(make_kraus(kind, ia / 10.0));
      for (int i = 0; i < 50; ++i) {
        const Matrix9 out = apply_channel(random_density(rng), lifted);
        CHECK(std::abs(out.trace() - Complex(1.0)) < 1e-12);
        CHECK(max_abs_diff(out, out.adjoint()) < 1e-12);
        CHECK(min_eigenvalue(out) >= -1e-10);
      }
    }
  }
}

TEST_CASE("alpha=0 is the identity map for all channels") {
  std::mt19937 rng(11);
  for (ChannelKind kind : {ChannelKind::AmplitudeDamping,
                           ChannelKind::PhaseDamping, ChannelKind::Depolarizing}) {
    const KrausSet lifted = lift_two_qutrit(make_kraus(kind, 0.0));
    for (int i = 0; i < 10; ++i) {
      const Matrix9 rho = random_density(rng);
      CHECK(max_abs_diff(apply_channel(rho, lifted), rho) < 1e-12);
    }
  }
}
