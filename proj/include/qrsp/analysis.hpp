#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qrsp/game.hpp"

namespace qrsp {

/// Axes a sweep can vary or fix: x1, y1, x2, y2 (radians) and alpha.
enum class Axis { X1, Y1, X2, Y2, Alpha };

std::string to_string(Axis axis);
Axis axis_from_string(const std::string& name);

struct AxisRange {
  Axis axis = Axis::Alpha;
  double start = 0.0;
  double stop = 1.0;
  double step = 0.05;

  std::vector<double> samples() const;  ///< start, start+step, ..., <= stop
};

/// One- or two-axis parameter sweep. Unvaried axes take their fixed values.
struct SweepSpec {
  std::vector<AxisRange> varying;  // size 1 or 2
  double x1 = 0.0, y1 = 0.0, x2 = 0.0, y2 = 0.0, alpha = 0.0;
  std::vector<ChannelKind> channels;
  PayoffMatrix payoff_matrix = PayoffMatrix::rsp();
};

struct SurfaceRow {
  std::vector<double> axis_values;
  ChannelKind channel = ChannelKind::Noiseless;
  double alice = 0.0;
  double bob = 0.0;
};

struct PayoffSurface {
  SweepSpec spec;
  std::vector<SurfaceRow> rows;  // lexicographic axis order, channels inner
};

/// Evaluates the payoff pipeline at every grid point per channel.
/// Throws std::invalid_argument for empty or out-of-bounds axis ranges.
PayoffSurface sweep(const SweepSpec& spec);

/// CSV with header `axis1[,axis2],channel,payoff_alice,payoff_bob`,
/// floats at 12 significant digits.
void write_csv(const PayoffSurface& surface, std::ostream& out);

/// Sweep specs matching the published figures 1-6. `step` overrides the
/// varying-axis resolution when given.
SweepSpec figure_spec(int figure, std::optional<double> step = {});

struct SymmetryCheck {
  bool pass = false;
  double max_asymmetry = 0.0;
  double argmin_alpha = 0.0;
};

/// Amplitude damping at x1=y1=pi/2, x2=y2=0: asserts
/// |payoff(a) - payoff(1-a)| < 1e-9 over the grid and reports the argmin.
SymmetryCheck check_ad_symmetry(const std::vector<double>& alphas);

struct MonotonicCheck {
  bool pass = false;
  std::optional<std::pair<double, double>> first_violation;  // (alpha, alpha')
};

/// Depolarizing at the figure-1 strategies: asserts a non-increasing payoff
/// over the sampled alphas, which must lie in [0, 8/9] (the curve rises
/// again past its zero at 8/9).
MonotonicCheck check_dep_monotonic(const std::vector<double>& alphas);

struct FlatnessCheck {
  bool asserted = false;  ///< pass/fail applies only at the figure-1 angles
  bool pass = false;
  double max_variation = 0.0;
};

/// Phase damping flatness over alpha. At the figure-1 strategies the check
/// asserts variation < 1e-9; at other strategies it only measures.
FlatnessCheck check_pd_flat(const std::vector<double>& alphas,
                            const StrategyParams& a = {std::numbers::pi / 2,
                                                       std::numbers::pi / 2},
                            const StrategyParams& b = {0.0, 0.0});

struct EquilibriumCandidate {
  StrategyParams a;
  StrategyParams b;
  double best_response_gap = 0.0;
};

/// Exhaustive best-response search over the discretized pure-strategy grid
/// with spacing `grid_step` (must divide pi/2 evenly). Returns all joint
/// profiles whose best-response gap is below 1e-9, sorted by gap then
/// lexicographically by (x1, y1, x2, y2).
std::vector<EquilibriumCandidate> find_equilibria(
    ChannelKind kind, double alpha, double grid_step,
    const PayoffMatrix& m = PayoffMatrix::rsp());

}  // namespace qrsp
