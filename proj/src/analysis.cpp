#include "qrsp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace qrsp {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kGapTol = 1e-9;

const StrategyParams kFigureAlice{kHalfPi, kHalfPi};
const StrategyParams kFigureBob{0.0, 0.0};

double axis_upper_bound(Axis axis) {
  return axis == Axis::Alpha ? 1.0 : kHalfPi;
}

double figure_payoff(ChannelKind kind, double alpha) {
  return payoff(kFigureAlice, kFigureBob, kind, alpha, PayoffMatrix::rsp())
      .alice;
}

void format_double(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  out += buf;
}

}  // namespace

std::string to_string(Axis axis) {
  switch (axis) {
    case Axis::X1: return "x1";
    case Axis::Y1: return "y1";
    case Axis::X2: return "x2";
    case Axis::Y2: return "y2";
    case Axis::Alpha: return "alpha";
  }
  return "?";
}

Axis axis_from_string(const std::string& name) {
  if (name == "x1") return Axis::X1;
  if (name == "y1") return Axis::Y1;
  if (name == "x2") return Axis::X2;
  if (name == "y2") return Axis::Y2;
  if (name == "alpha") return Axis::Alpha;
  throw std::invalid_argument("unknown axis: " + name);
}

std::vector<double> AxisRange::samples() const {
  if (step <= 0.0) throw std::invalid_argument("axis step must be positive");
  if (start < 0.0 || stop > axis_upper_bound(axis) + 1e-12 || stop < start) {
    throw std::invalid_argument("axis range out of bounds for " +
                                to_string(axis));
  }
  std::vector<double> out;
  for (int i = 0;; ++i) {
    const double v = start + i * step;
    if (v > stop + 1e-12) break;
    out.push_back(std::min(v, stop));
  }
  return out;
}

PayoffSurface sweep(const SweepSpec& spec) {
  if (spec.varying.empty() || spec.varying.size() > 2) {
    throw std::invalid_argument("sweep varies one or two axes");
  }
  if (spec.channels.empty()) {
    throw std::invalid_argument("sweep needs at least one channel");
  }

  std::vector<std::vector<double>> grids;
  for (const AxisRange& r : spec.varying) {
    grids.push_back(r.samples());
    if (grids.back().empty()) {
      throw std::invalid_argument("empty axis range for " + to_string(r.axis));
    }
  }
  if (grids.size() == 1) grids.push_back({0.0});  // dummy inner axis

  PayoffSurface surface;
  surface.spec = spec;
  const bool two_axes = spec.varying.size() == 2;
  for (double v0 : grids[0]) {
    for (double v1 : grids[1]) {
      double x1 = spec.x1, y1 = spec.y1, x2 = spec.x2, y2 = spec.y2;
      double alpha = spec.alpha;
      auto assign = [&](Axis axis, double v) {
        switch (axis) {
          case Axis::X1: x1 = v; break;
          case Axis::Y1: y1 = v; break;
          case Axis::X2: x2 = v; break;
          case Axis::Y2: y2 = v; break;
          case Axis::Alpha: alpha = v; break;
        }
      };
      assign(spec.varying[0].axis, v0);
      if (two_axes) assign(spec.varying[1].axis, v1);
      for (ChannelKind kind : spec.channels) {
        const PayoffResult r =
            payoff({x1, y1}, {x2, y2}, kind, alpha, spec.payoff_matrix);
        SurfaceRow row;
        row.axis_values = two_axes ? std::vector<double>{v0, v1}
                                   : std::vector<double>{v0};
        row.channel = kind;
        row.alice = r.alice;
        row.bob = r.bob;
        surface.rows.push_back(std::move(row));
      }
    }
  }
  return surface;
}

void write_csv(const PayoffSurface& surface, std::ostream& out) {
  std::string line;
  for (const AxisRange& r : surface.spec.varying) {
    line += to_string(r.axis);
    line += ',';
  }
  line += "channel,payoff_alice,payoff_bob\n";
  out << line;
  for (const SurfaceRow& row : surface.rows) {
    line.clear();
    for (double v : row.axis_values) {
      format_double(line, v);
      line += ',';
    }
    line += to_string(row.channel);
    line += ',';
    format_double(line, row.alice);
    line += ',';
    format_double(line, row.bob);
    line += '\n';
    out << line;
  }
}

SweepSpec figure_spec(int figure, std::optional<double> step) {
  const double alpha_step = step.value_or(0.05);
  const double angle_step = step.value_or(kHalfPi / 20.0);
  const std::vector<ChannelKind> all = {ChannelKind::AmplitudeDamping,
                                        ChannelKind::Depolarizing,
                                        ChannelKind::PhaseDamping};
  SweepSpec spec;
  switch (figure) {
    case 1:
      spec.varying = {{Axis::Alpha, 0.0, 1.0, alpha_step}};
      spec.x1 = spec.y1 = kHalfPi;
      spec.channels = all;
      break;
    case 2:
      spec.varying = {{Axis::X1, 0.0, kHalfPi, angle_step}};
      spec.y1 = kHalfPi;
      spec.alpha = 0.5;
      spec.channels = all;
      break;
    case 3:
      spec.varying = {{Axis::Y1, 0.0, kHalfPi, angle_step}};
      spec.x1 = kHalfPi;
      spec.alpha = 0.5;
      spec.channels = all;
      break;
    case 4:
    case 5:
    case 6:
      spec.varying = {{Axis::X1, 0.0, kHalfPi, angle_step},
                      {Axis::Alpha, 0.0, 1.0, alpha_step}};
      spec.y1 = kHalfPi;
      spec.channels = {figure == 4   ? ChannelKind::AmplitudeDamping
                       : figure == 5 ? ChannelKind::Depolarizing
                                     : ChannelKind::PhaseDamping};
      break;
    default:
      throw std::invalid_argument("figure number must be 1..6");
  }
  return spec;
}

SymmetryCheck check_ad_symmetry(const std::vector<double>& alphas) {
  SymmetryCheck check;
  double min_payoff = std::numeric_limits<double>::infinity();
  for (double a : alphas) {
    const double p = figure_payoff(ChannelKind::AmplitudeDamping, a);
    const double mirrored = figure_payoff(ChannelKind::AmplitudeDamping, 1.0 - a);
    check.max_asymmetry = std::max(check.max_asymmetry, std::abs(p - mirrored));
    if (p < min_payoff) {
      min_payoff = p;
      check.argmin_alpha = a;
    }
  }
  check.pass = check.max_asymmetry < kGapTol;
  return check;
}

MonotonicCheck check_dep_monotonic(const std::vector<double>& alphas) {
  for (double a : alphas) {
    if (a < 0.0 || a > 8.0 / 9.0 + 1e-12) {
      throw std::invalid_argument(
          "depolarizing monotonicity window is [0, 8/9]");
    }
  }
  MonotonicCheck check;
  check.pass = true;
  double prev = std::numeric_limits<double>::infinity();
  double prev_alpha = 0.0;
  for (double a : alphas) {
    const double p = figure_payoff(ChannelKind::Depolarizing, a);
    if (p > prev + kGapTol) {
      check.pass = false;
      if (!check.first_violation) check.first_violation = {prev_alpha, a};
    }
    prev = p;
    prev_alpha = a;
  }
  return check;
}

FlatnessCheck check_pd_flat(const std::vector<double>& alphas,
                            const StrategyParams& a, const StrategyParams& b) {
  FlatnessCheck check;
  check.asserted = std::abs(a.x - kFigureAlice.x) < 1e-12 &&
                   std::abs(a.y - kFigureAlice.y) < 1e-12 &&
                   std::abs(b.x) < 1e-12 && std::abs(b.y) < 1e-12;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double alpha : alphas) {
    const double p =
        payoff(a, b, ChannelKind::PhaseDamping, alpha, PayoffMatrix::rsp())
            .alice;
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  check.max_variation = alphas.empty() ? 0.0 : hi - lo;
  check.pass = check.asserted && check.max_variation < kGapTol;
  return check;
}

std::vector<EquilibriumCandidate> find_equilibria(ChannelKind kind,
                                                  double alpha,
                                                  double grid_step,
                                                  const PayoffMatrix& m) {
  const double intervals = kHalfPi / grid_step;
  const int n = static_cast<int>(std::llround(intervals));
  if (n < 1 || std::abs(intervals - n) > 1e-9) {
    throw std::invalid_argument("grid step must divide pi/2 evenly");
  }
  std::vector<StrategyParams> strategies;
  strategies.reserve((n + 1) * (n + 1));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      strategies.push_back(
          {std::min(i * grid_step, kHalfPi), std::min(j * grid_step, kHalfPi)});
    }
  }
  const std::size_t count = strategies.size();

  const KrausSet lifted = lift_two_qutrit(make_kraus(kind, alpha));
  const Matrix9 noisy = apply_channel(initial_state(), lifted);

  std::vector<Matrix3> unitaries;
  unitaries.reserve(count);
  for (const StrategyParams& s : strategies) {
    unitaries.push_back(strategy_unitary(s));
  }

  const Matrix9 pa = payoff_operator(Player::Alice, m);
  const Matrix9 pb = payoff_operator(Player::Bob, m);
  Eigen::MatrixXd alice(count, count), bob(count, count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      const Matrix9 v = tensor(unitaries[i], unitaries[j]);
      const Matrix9 rho = v * noisy * v.adjoint();
      alice(i, j) = (pa * rho).trace().real();
      bob(i, j) = (pb * rho).trace().real();
    }
  }

  const Eigen::RowVectorXd alice_best = alice.colwise().maxCoeff();
  const Eigen::VectorXd bob_best = bob.rowwise().maxCoeff();

  std::vector<EquilibriumCandidate> candidates;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      const double gap = std::max(alice_best(j) - alice(i, j),
                                  bob_best(i) - bob(i, j));
      if (gap < kGapTol) {
        candidates.push_back({strategies[i], strategies[j], std::max(gap, 0.0)});
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const EquilibriumCandidate& l, const EquilibriumCandidate& r) {
              auto key = [](const EquilibriumCandidate& c) {
                return std::make_tuple(c.best_response_gap, c.a.x, c.a.y,
                                       c.b.x, c.b.y);
              };
              return key(l) < key(r);
            });
  return candidates;
}

}  // namespace qrsp
