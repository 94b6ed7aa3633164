#include <doctest.h>

#include <random>

#include "qrsp/game.hpp"
#include "qrsp/verify.hpp"

using namespace qrsp;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
const PayoffMatrix kTable = PayoffMatrix::rsp();

}  // namespace

TEST_CASE("initial state is the maximally entangled two-qutrit state") {
  const Matrix9 rho = initial_state();
  CHECK(std::abs(rho.trace() - Complex(1.0)) < 1e-15);
  CHECK(std::abs(rho(0, 0) - Complex(1.0 / 3.0)) < 1e-15);
  CHECK(std::abs(rho(0, 4) - Complex(1.0 / 3.0)) < 1e-15);
  CHECK(std::abs(rho(8, 4) - Complex(1.0 / 3.0)) < 1e-15);
  CHECK(std::abs(rho(1, 1)) == 0.0);
  // purity of a pure state
  CHECK(std::abs((rho * rho).trace() - Complex(1.0)) < 1e-12);
}

TEST_CASE("strategy unitary corner cases") {
  CHECK(max_abs_diff(strategy_unitary({0.0, 0.0}), Matrix3::Identity()) < 1e-15);

  // U(pi/2, 0): |0> -> i|0>, |1> -> i|2>, |2> -> i|1>
  const Matrix3 u1 = strategy_unitary({kHalfPi, 0.0});
  Matrix3 expected1 = Matrix3::Zero();
  const Complex i(0.0, 1.0);
  expected1(0, 0) = i;
  expected1(2, 1) = i;
  expected1(1, 2) = i;
  CHECK(max_abs_diff(u1, expected1) < 1e-15);

  // U(pi/2, pi/2): phased cyclic shift
  const Matrix3 u2 = strategy_unitary({kHalfPi, kHalfPi});
  Matrix3 expected2 = Matrix3::Zero();
  expected2(0, 1) = -1.0;
  expected2(1, 2) = -1.0;
  expected2(2, 0) = -1.0;
  CHECK(max_abs_diff(u2, expected2) < 1e-15);

  CHECK_THROWS_AS(strategy_unitary({-0.1, 0.0}), std::domain_error);
  CHECK_THROWS_AS(strategy_unitary({0.0, 2.0}), std::domain_error);
}

TEST_CASE("strategy unitarity over the full grid") {
  for (int ix = 0; ix <= 10; ++ix) {
    for (int iy = 0; iy <= 10; ++iy) {
      const Matrix3 u =
          strategy_unitary({ix * kHalfPi / 10.0, iy * kHalfPi / 10.0});
      CHECK(max_abs_diff(u.adjoint() * u, Matrix3::Identity()) < 1e-12);
    }
  }
}

TEST_CASE("final state") {
  const Matrix9 rho0 = initial_state();
  CHECK(max_abs_diff(final_state(rho0, {0, 0}, {0, 0}), rho0) < 1e-15);

  // cyclic shift on Alice moves the support onto |20>, |01>, |12>
  const Matrix9 shifted = final_state(rho0, {kHalfPi, kHalfPi}, {0, 0});
  for (int d = 0; d < 9; ++d) {
    const double expected = (d == 6 || d == 1 || d == 5) ? 1.0 / 3.0 : 0.0;
    CHECK(std::abs(shifted(d, d).real() - expected) < 1e-12);
  }
  CHECK(std::abs(shifted.trace() - Complex(1.0)) < 1e-12);
  CHECK(std::abs((shifted * shifted).trace() - Complex(1.0)) < 1e-12);
}

TEST_CASE("payoff operators") {
  const Matrix9 alice = payoff_operator(Player::Alice, kTable);
  const std::array<double, 9> diag = {0, 1, -1, -1, 0, 1, 1, -1, 0};
  for (int d = 0; d < 9; ++d) {
    CHECK(alice(d, d) == Complex(diag[d]));
    for (int c = 0; c < 9; ++c)
      if (c != d) CHECK(alice(d, c) == Complex(0.0));
  }
  const Matrix9 bob = payoff_operator(Player::Bob, kTable);
  CHECK(max_abs_diff(bob, (-alice).eval()) == 0.0);

  PayoffMatrix zeros;
  CHECK(payoff_operator(Player::Alice, zeros).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("figure-1 payoff curves match the analytic oracles") {
  for (double a : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const double ad = payoff({kHalfPi, kHalfPi}, {0, 0},
                             ChannelKind::AmplitudeDamping, a, kTable)
                          .alice;
    CHECK(ad == doctest::Approx(1 - 2 * a + 2 * a * a).epsilon(1e-9));
    const double dep =
        payoff({kHalfPi, kHalfPi}, {0, 0}, ChannelKind::Depolarizing, a, kTable)
            .alice;
    const double q = 1 - 9.0 * a / 8.0;
    CHECK(dep == doctest::Approx(q * q).epsilon(1e-9));
    const double pd =
        payoff({kHalfPi, kHalfPi}, {0, 0}, ChannelKind::PhaseDamping, a, kTable)
            .alice;
    CHECK(pd == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("identity strategies on any channel at alpha=0 tie the game") {
  for (ChannelKind kind : {ChannelKind::AmplitudeDamping,
                           ChannelKind::PhaseDamping, ChannelKind::Depolarizing,
                           ChannelKind::Noiseless}) {
    const PayoffResult r = payoff({0, 0}, {0, 0}, kind, 0.0, kTable);
    CHECK(std::abs(r.alice) < 1e-12);
    CHECK(std::abs(r.bob) < 1e-12);
  }
}

TEST_CASE("zero-sum over random samples") {
  std::mt19937 rng(321);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, 2);
  const std::array<ChannelKind, 3> kinds = {ChannelKind::AmplitudeDamping,
                                            ChannelKind::PhaseDamping,
                                            ChannelKind::Depolarizing};
  for (int i = 0; i < 200; ++i) {
    const PayoffResult r = payoff(random_strategy(rng), random_strategy(rng),
                                  kinds[pick(rng)], unit(rng), kTable);
    CHECK(std::abs(r.alice + r.bob) < 1e-10);
    CHECK(r.alice >= -1.0 - 1e-12);
    CHECK(r.alice <= 1.0 + 1e-12);
  }
}

TEST_CASE("noiseless strategy swap mirrors the payoffs") {
  std::mt19937 rng(55);
  for (int i = 0; i < 25; ++i) {
    const StrategyParams a = random_strategy(rng);
    const StrategyParams b = random_strategy(rng);
    const PayoffResult r1 = payoff(a, b, ChannelKind::Noiseless, 0.0, kTable);
    const PayoffResult r2 = payoff(b, a, ChannelKind::Noiseless, 0.0, kTable);
    CHECK(r1.alice == doctest::Approx(r2.bob).epsilon(1e-10));
    CHECK(r1.bob == doctest::Approx(r2.alice).epsilon(1e-10));
  }
}

TEST_CASE("classical mixed baseline") {
  const std::array<double, 3> uniform = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  const PayoffResult eq = classical_mixed_payoff(uniform, uniform, kTable);
  CHECK(std::abs(eq.alice) < 1e-15);
  CHECK(std::abs(eq.bob) < 1e-15);

  // rock beats scissors
  const PayoffResult rs =
      classical_mixed_payoff({1, 0, 0}, {0, 1, 0}, kTable);
  CHECK(rs.alice == 1.0);
  CHECK(rs.bob == -1.0);

  const PayoffResult tie = classical_mixed_payoff({1, 0, 0}, {1, 0, 0}, kTable);
  CHECK(tie.alice == 0.0);
  CHECK(tie.bob == 0.0);

  CHECK_THROWS_AS(classical_mixed_payoff({0.5, 0.5, 0.5}, uniform, kTable),
                  std::invalid_argument);
  CHECK_THROWS_AS(classical_mixed_payoff(uniform, {1.5, -0.5, 0.0}, kTable),
                  std::invalid_argument);
}

TEST_CASE("table 1 is zero-sum and non-transitive") {
  CHECK(kTable.is_zero_sum());
  // R > S > P > R cell signs
  CHECK(kTable.alice[0][1] == 1.0);  // R beats S
  CHECK(kTable.alice[1][2] == 1.0);  // S beats P
  CHECK(kTable.alice[2][0] == 1.0);  // P beats R
}
