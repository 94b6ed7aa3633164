#include "qrsp/verify.hpp"

#include <cmath>
#include <sstream>

#include "qrsp/analysis.hpp"

namespace qrsp {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

const std::vector<ChannelKind> kNoisy = {ChannelKind::AmplitudeDamping,
                                         ChannelKind::PhaseDamping,
                                         ChannelKind::Depolarizing};

std::vector<double> alpha_grid() {
  std::vector<double> out;
  for (int i = 0; i <= 10; ++i) out.push_back(i / 10.0);
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

Matrix9 random_density(std::mt19937& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix9 g;
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 9; ++c) g(r, c) = Complex(normal(rng), normal(rng));
  Matrix9 rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

StrategyParams random_strategy(std::mt19937& rng) {
  std::uniform_real_distribution<double> angle(0.0, kHalfPi);
  return {angle(rng), angle(rng)};
}

std::vector<CheckResult> run_verification() {
  std::vector<CheckResult> results;
  const PayoffMatrix table = PayoffMatrix::rsp();
  const std::vector<double> alphas = alpha_grid();

  {
    double worst = 0.0;
    for (ChannelKind kind : kNoisy) {
      for (double a : alphas) {
        const KrausSet k = make_kraus(kind, a);
        worst = std::max(worst, check_completeness(k));
        worst = std::max(worst, check_completeness(lift_two_qutrit(k)));
      }
    }
    results.push_back({"kraus completeness (single and lifted)", true,
                       worst < 1e-12, worst, "max residual"});
  }

  {
    double worst = 0.0;
    for (int i = 0; i <= 10; ++i) {
      for (int j = 0; j <= 10; ++j) {
        const Matrix3 u =
            strategy_unitary({i * kHalfPi / 10.0, j * kHalfPi / 10.0});
        worst = std::max(
            worst, max_abs_diff(u.adjoint() * u, Matrix3::Identity()));
      }
    }
    results.push_back({"strategy unitarity over 11x11 grid", true,
                       worst < 1e-12, worst, "max residual"});
  }

  {
    std::mt19937 rng(20240901);
    double worst_trace = 0.0, worst_herm = 0.0, worst_eig = 0.0;
    for (ChannelKind kind : kNoisy) {
      for (double a : alphas) {
        const KrausSet lifted = lift_two_qutrit(make_kraus(kind, a));
        for (int s = 0; s < 50; ++s) {
          const Matrix9 out = apply_channel(random_density(rng), lifted);
          worst_trace =
              std::max(worst_trace, std::abs(out.trace() - Complex(1.0)));
          worst_herm = std::max(worst_herm, max_abs_diff(out, out.adjoint()));
          worst_eig = std::min(min_eigenvalue(out), worst_eig);
        }
      }
    }
    results.push_back({"trace preservation (50 states per channel/alpha)",
                       true, worst_trace < 1e-12, worst_trace,
                       "max |trace - 1|"});
    results.push_back({"hermiticity preservation", true, worst_herm < 1e-12,
                       worst_herm, "max residual"});
    results.push_back({"positivity of channel outputs", true,
                       worst_eig >= -1e-10, worst_eig, "min eigenvalue"});
  }

  {
    std::mt19937 rng(20240902);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> pick(0, 2);
    double worst = 0.0;
    for (int s = 0; s < 200; ++s) {
      const PayoffResult r = payoff(random_strategy(rng), random_strategy(rng),
                                    kNoisy[pick(rng)], unit(rng), table);
      worst = std::max(worst, std::abs(r.alice + r.bob));
    }
    results.push_back({"zero-sum over 200 random samples", true, worst < 1e-10,
                       worst, "max |alice + bob|"});
  }

  {
    std::mt19937 rng(20240903);
    double worst = 0.0;
    for (int s = 0; s < 50; ++s) {
      const StrategyParams a = random_strategy(rng);
      const StrategyParams b = random_strategy(rng);
      const PayoffResult base = payoff(a, b, ChannelKind::Noiseless, 0.0, table);
      for (ChannelKind kind : kNoisy) {
        const PayoffResult r = payoff(a, b, kind, 0.0, table);
        worst = std::max({worst, std::abs(r.alice - base.alice),
                          std::abs(r.bob - base.bob)});
      }
    }
    results.push_back({"alpha=0 equivalence across channels", true,
                       worst < 1e-12, worst, "max payoff deviation"});
  }

  {
    const SymmetryCheck sym = check_ad_symmetry(alphas);
    results.push_back({"AD payoff symmetry about alpha=0.5", true, sym.pass,
                       sym.max_asymmetry,
                       "argmin at alpha=" + fmt(sym.argmin_alpha)});
  }

  {
    std::vector<double> window;
    for (int i = 0; i <= 8; ++i) window.push_back(i / 10.0);
    window.push_back(8.0 / 9.0);
    const MonotonicCheck mono = check_dep_monotonic(window);
    results.push_back({"Dep payoff non-increasing on [0, 8/9]", true,
                       mono.pass, 0.0, "figure-1 strategies"});
  }

  {
    const FlatnessCheck flat = check_pd_flat(alphas);
    results.push_back({"PD payoff flat over alpha", true, flat.pass,
                       flat.max_variation, "figure-1 strategies"});
  }

  {
    const double ad1 =
        payoff({kHalfPi, kHalfPi}, {0.0, 0.0}, ChannelKind::AmplitudeDamping,
               1.0, table)
            .alice;
    results.push_back({"AD at alpha=1 returns to the noiseless payoff", true,
                       std::abs(ad1 - 1.0) < 1e-9, ad1, "expected 1"});
    const double dep1 =
        payoff({kHalfPi, kHalfPi}, {0.0, 0.0}, ChannelKind::Depolarizing, 1.0,
               table)
            .alice;
    results.push_back({"Dep at alpha=1 (measured, not asserted)", false,
                       std::abs(dep1 - 1.0) < 1e-9, dep1,
                       "noiseless payoff would be 1; pipeline gives " +
                           fmt(dep1)});
  }

  return results;
}

}  // namespace qrsp
