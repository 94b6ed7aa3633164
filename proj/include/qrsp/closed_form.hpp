#pragma once

#include <array>
#include <vector>

#include "qrsp/game.hpp"

namespace qrsp {

/// Arguments of the published closed-form payoff expressions: both players'
/// strategy angles, the noise parameter, and the nine payoff-table entries
/// for the player being evaluated (row-major, entries[3i+j] = $_ij).
struct ClosedFormInput {
  double x1 = 0.0;
  double y1 = 0.0;
  double x2 = 0.0;
  double y2 = 0.0;
  double alpha = 0.0;
  std::array<double, 9> payoff_entries{};
};

/// The three closed-form evaluators transcribe the published expressions
/// verbatim, sign for sign; they are claims under test, not the oracle.
/// The simulation pipeline is the oracle of record.
double payoff_ad_closed(const ClosedFormInput& in);
double payoff_dep_closed(const ClosedFormInput& in);
double payoff_pd_closed(const ClosedFormInput& in);

double closed_form_payoff(ChannelKind kind, const ClosedFormInput& in);

/// Grid for closed-form-vs-simulation comparison: evenly spaced points per
/// strategy axis over [0, pi/2] and alpha values over [0, 1].
struct CompareGrid {
  int strategy_points = 4;
  int alpha_points = 11;

  static CompareGrid coarse() { return {4, 11}; }
  static CompareGrid fine() { return {6, 21}; }
};

struct DiscrepancyReport {
  ChannelKind channel = ChannelKind::Noiseless;
  double tolerance = 1e-9;
  std::vector<ClosedFormInput> grid;
  std::vector<double> deviations;  ///< |closed - simulated| per grid point
  double max_abs_deviation = 0.0;
  double agreeing_fraction = 0.0;
};

/// Evaluates both the closed form and the full simulation at every grid
/// point. Deterministic: identical grids produce identical reports.
DiscrepancyReport compare_closed_vs_sim(ChannelKind kind,
                                        const CompareGrid& grid,
                                        const PayoffMatrix& m);

/// JSON serialization per the report schema:
/// {channel, tolerance, grid, deviations, max_abs_deviation, agreeing_fraction}.
std::string to_json(const DiscrepancyReport& report);

}  // namespace qrsp
