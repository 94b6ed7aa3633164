#include "qrsp/closed_form.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace qrsp {

namespace {

struct Entries {
  double s00, s01, s02, s10, s11, s12, s20, s21, s22;
  explicit Entries(const std::array<double, 9>& e)
      : s00(e[0]), s01(e[1]), s02(e[2]), s10(e[3]), s11(e[4]), s12(e[5]),
        s20(e[6]), s21(e[7]), s22(e[8]) {}
};

}  // namespace

// The three evaluators below are line-for-line transcriptions of the
// published expressions, including every printed coefficient. A second,
// independently transcribed copy lives in the test suite and the two are
// compared at random points (double-entry transcription).

double payoff_ad_closed(const ClosedFormInput& in) {
  const Entries e(in.payoff_entries);
  const double a = in.alpha;
  const double x1 = in.x1, y1 = in.y1, x2 = in.x2, y2 = in.y2;
  using std::cos;
  using std::sin;

  const double v =
      (2 + a * a) * e.s00
      + (2 + a * (-4 + 5 * a)) * e.s00 * cos(2 * y1) * cos(2 * y2)
      + a * (2 + a) * e.s00 * (cos(2 * y1) + cos(2 * y2))
      + 2 * (-1 + a) *
            ((-e.s11 + e.s12 + e.s21 - e.s22) * cos(y1 + y2) * sin(2 * x1) *
                 sin(2 * x2) *
                 ((-1 + a) * cos(2 * y1) * cos(2 * y2) + sin(y1) * sin(y2))
             + e.s00 * sin(2 * y1) * sin(2 * y2))
      + std::pow(cos(x1), 2) *
            (-4 * (-1 + a) * a * e.s20 * std::pow(cos(y2), 2)
             - e.s10 * cos(2 * y1) *
                   (a * (2 + a) + (2 + a * (-4 + 5 * a)) * cos(2 * y2))
             + e.s10 * (2 + a * a + a * (2 + a) * cos(2 * y2)
                        - 2 * (-1 + a) * sin(2 * y1) * sin(2 * y2)))
      + std::pow(cos(x2), 2) *
            ((2 + a * a) * e.s01
             + a * (2 + a) * e.s01 * (cos(2 * y1) - cos(2 * y2))
             + (-2 + (4 - 5 * a) * a) * e.s01 * cos(2 * y1) * cos(2 * y2)
             - 2 * (-1 + a) *
                   (2 * a * e.s02 * std::pow(cos(y1), 2)
                    + e.s01 * sin(2 * y1) * sin(2 * y2))
             + std::pow(cos(x1), 2) *
                   ((2 + a * a) * e.s11 + 4 * std::pow(-1 + a, 2) * e.s22
                    + (2 + a * (-4 + 5 * a)) * e.s11 * cos(2 * y1) * cos(2 * y2)
                    - a * (2 + a) * e.s11 * (cos(2 * y1) + cos(2 * y2))
                    - 2 * (-1 + a) *
                          (2 * a * e.s12 * std::pow(sin(y1), 2)
                           + 2 * a * e.s21 * std::pow(sin(y2), 2)
                           - e.s11 * sin(2 * y1) * sin(2 * y2))))
      + std::pow(sin(x2), 2) *
            (-4 * (-1 + a) * a * e.s01 * std::pow(cos(y1), 2)
             + e.s02 * (2 + a * a - a * (2 + a) * cos(2 * y2)
                        + cos(2 * y1) * (a * (2 + a)
                                         + (-2 + (4 - 5 * a) * a) * cos(2 * y2))
                        - 2 * (-1 + a) * sin(2 * y1) * sin(2 * y2))
             + std::pow(cos(x1), 2) *
                   ((2 + a * a) * e.s12 + 4 * std::pow(-1 + a, 2) * e.s21
                    - a * (2 + a) * e.s12 * cos(2 * y2)
                    + e.s12 * cos(2 * y1) *
                          (-a * (2 + a) + (2 + a * (-4 + 5 * a)) * cos(2 * y2))
                    - 2 * (-1 + a) *
                          (2 * a * e.s11 * std::pow(sin(y1), 2)
                           + 2 * a * e.s22 * std::pow(sin(y2), 2)
                           - e.s12 * sin(2 * y1) * sin(2 * y2))))
      + std::pow(sin(x1), 2) *
            (2 * e.s20 + a * a * e.s20
             + 4 * a * e.s10 * std::pow(cos(y2), 2)
             - 4 * a * a * e.s10 * std::pow(cos(y2), 2)
             - a * (2 + a) * e.s20 * (cos(2 * y1) - cos(2 * y2))
             + (-2 + (4 - 5 * a) * a) * e.s20 * cos(2 * y1) * cos(2 * y2)
             - 2 * (-1 + a) * e.s20 * sin(2 * y1) * sin(2 * y2)
             + 2 * std::pow(cos(x2), 2) *
                   (2 * std::pow(-1 + a, 2) * e.s12
                    + 2 * std::pow(sin(y1), 2) *
                          (-(-1 + a) * a * (e.s22 + e.s21 * std::pow(cos(y2), 2))
                           + (1 + 2 * a * a) * e.s21 * std::pow(sin(y2), 2))
                    + (-1 + a) *
                          (e.s21 * std::pow(cos(y1), 2) *
                               (-1 + (-1 + 2 * a) * cos(2 * y2))
                           - 2 * a * e.s11 * std::pow(sin(y2), 2)
                           + e.s21 * sin(2 * y1) * sin(2 * y2)))
             + 2 * std::pow(sin(x2), 2) *
                   ((-1 + a) * e.s22 * std::pow(cos(y1), 2) *
                        (-1 + (-1 + 2 * a) * cos(2 * y2))
                    + (e.s22 + a * (2 * e.s21 - 2 * a * e.s21 + e.s22 + a * e.s22)
                       + (-1 + a - 3 * a * a) * e.s22 * cos(2 * y2)) *
                          std::pow(sin(y1), 2)
                    + (-1 + a) * (2 * (-1 + a) * e.s11
                                  - 2 * a * e.s12 * std::pow(sin(y2), 2)
                                  + e.s22 * sin(2 * y1) * sin(2 * y2))));
  return v / 12.0;
}

double payoff_dep_closed(const ClosedFormInput& in) {
  const Entries e(in.payoff_entries);
  const double a = in.alpha;
  const double x1 = in.x1, y1 = in.y1, x2 = in.x2, y2 = in.y2;
  using std::cos;
  using std::sin;

  const double f = (8 - 9 * a) * (8 - 9 * a);
  const double v =
      f * (e.s11 - e.s12 - e.s21 + e.s22) * cos(2 * (x1 + x2)) *
          (5 + 3 * cos(2 * (y1 + y2)))
      + 2 * (4 * (64 + 3 * a * (-16 + 9 * a)) * e.s00
             - 3 * a * (-16 + 9 * a) *
                   (2 * e.s01 + 2 * e.s02 + 2 * e.s10 - e.s11 - e.s12
                    + 2 * e.s20 - e.s21 - e.s22)
             + 64 * (2 * e.s01 + 2 * e.s02 + 2 * e.s10 + 3 * e.s11 + 3 * e.s12
                     + 2 * e.s20 + 3 * (e.s21 + e.s22))
             + f * ((4 * e.s00 - 2 * e.s01 - 2 * e.s02 - 2 * e.s10 + e.s11
                     + e.s12 - 2 * e.s20 + e.s21 + e.s22) *
                        cos(2 * (y1 + y2))
                    + (2 * (2 * e.s10 - e.s11 - e.s12 - 2 * e.s20 + e.s21
                            + e.s22) * cos(2 * x1)
                       + (e.s11 - e.s12 - e.s21 + e.s22) * cos(2 * (x1 - x2))
                       + 2 * (2 * e.s01 - 2 * e.s02 - e.s11 + e.s12 - e.s21
                              + e.s22) * cos(2 * x2)) *
                          std::pow(sin(y1 + y2), 2)));
  return v / 3072.0;
}

double payoff_pd_closed(const ClosedFormInput& in) {
  const Entries e(in.payoff_entries);
  const double a = in.alpha;
  const double x1 = in.x1, y1 = in.y1, x2 = in.x2, y2 = in.y2;
  using std::cos;
  using std::sin;

  const double g = 2 + 3 * (-2 + a) * a;
  const double v =
      -8 * (2 * e.s11 + 2 * e.s12 + 2 * e.s20 + e.s21 + e.s22) * cos(2 * x1)
      + cos(2 * x2) *
            (8 * (2 * e.s01 - 2 * e.s02 - 2 * e.s11 + 2 * e.s12 + e.s21 - e.s22
                  + (2 * e.s11 - 2 * e.s12 - e.s21 + e.s22) * cos(2 * x1))
             - 8 * (2 * e.s01 - 2 * e.s02 - e.s21 + e.s22
                    + (e.s21 - e.s22) * cos(2 * x1)) * cos(2 * y1) * cos(2 * y2)
             + 4 * g * (2 * e.s01 - 2 * e.s02 - e.s21 + e.s22
                        + (e.s21 - e.s22) * cos(2 * x1)) *
                   sin(2 * y1) * sin(2 * y2))
      + 16 * std::pow(cos(2 * x1), 2) *
            (2 * e.s10 + e.s11 + e.s12 + 2 * e.s21 + 2 * e.s22
             + (e.s11 - e.s12 - 2 * e.s21 + 2 * e.s22) * cos(2 * x2)
             + (-2 * e.s10 + e.s11 + e.s12 + (e.s11 - e.s12) * cos(2 * x2)) *
                   cos(2 * y1) * cos(2 * y2)
             + 0.5 * g * (2 * e.s10 - e.s11 - e.s12
                          + (-e.s11 + e.s12) * cos(2 * x2)) *
                   sin(2 * y1) * sin(2 * y2))
      - 8 * (e.s11 - e.s12 - e.s21 + e.s22) * sin(2 * x1) * sin(2 * x2) *
            (g + g * cos(2 * (y1 + y2))
             + std::sqrt(3.0) * a * (-2 + 3 * a) * (sin(2 * y1) + sin(2 * y2)))
      + 8 * (4 * e.s00 + 2 * e.s01 + 2 * e.s02 + 2 * e.s11 + 2 * e.s12
             + 2 * e.s20 + e.s21 + e.s22
             + (2 * e.s00 - e.s01 - e.s02
                + (-2 * e.s20 + e.s21 + e.s22) * std::pow(sin(2 * x1), 2)) *
                   (2 * cos(2 * y1) * cos(2 * y2)
                    + (-2 - 3 * (-2 + a) * a) * sin(2 * y1) * sin(2 * y2)));
  return v / 192.0;
}

double closed_form_payoff(ChannelKind kind, const ClosedFormInput& in) {
  switch (kind) {
    case ChannelKind::AmplitudeDamping: return payoff_ad_closed(in);
    case ChannelKind::Depolarizing: return payoff_dep_closed(in);
    case ChannelKind::PhaseDamping: return payoff_pd_closed(in);
    case ChannelKind::Noiseless:
      throw std::invalid_argument("no closed form for the noiseless channel");
  }
  throw std::invalid_argument("bad channel kind");
}

DiscrepancyReport compare_closed_vs_sim(ChannelKind kind,
                                        const CompareGrid& grid,
                                        const PayoffMatrix& m) {
  if (grid.strategy_points < 1 || grid.alpha_points < 1) {
    throw std::invalid_argument("comparison grid must be nonempty");
  }
  const double half_pi = std::numbers::pi / 2.0;
  std::vector<double> angles(grid.strategy_points);
  for (int i = 0; i < grid.strategy_points; ++i) {
    angles[i] = grid.strategy_points == 1
                    ? 0.0
                    : half_pi * i / (grid.strategy_points - 1);
  }
  std::vector<double> alphas(grid.alpha_points);
  for (int i = 0; i < grid.alpha_points; ++i) {
    alphas[i] = grid.alpha_points == 1 ? 0.0 : 1.0 * i / (grid.alpha_points - 1);
  }

  std::array<double, 9> entries{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) entries[3 * i + j] = m.alice[i][j];

  DiscrepancyReport report;
  report.channel = kind;
  report.tolerance = 1e-9;
  std::size_t agreeing = 0;
  for (double alpha : alphas) {
    const KrausSet lifted = lift_two_qutrit(make_kraus(kind, alpha));
    const Matrix9 noisy = apply_channel(initial_state(), lifted);
    for (double x1 : angles)
      for (double y1 : angles)
        for (double x2 : angles)
          for (double y2 : angles) {
            ClosedFormInput in{x1, y1, x2, y2, alpha, entries};
            const double closed = closed_form_payoff(kind, in);
            const double simulated =
                payoff_from_noisy(noisy, {x1, y1}, {x2, y2}, m).alice;
            const double dev = std::abs(closed - simulated);
            report.grid.push_back(in);
            report.deviations.push_back(dev);
            report.max_abs_deviation = std::max(report.max_abs_deviation, dev);
            if (dev < report.tolerance) ++agreeing;
          }
  }
  report.agreeing_fraction =
      static_cast<double>(agreeing) / static_cast<double>(report.grid.size());
  return report;
}

std::string to_json(const DiscrepancyReport& report) {
  nlohmann::ordered_json j;
  j["channel"] = to_string(report.channel);
  j["tolerance"] = report.tolerance;
  j["grid"] = nlohmann::ordered_json::array();
  for (const ClosedFormInput& in : report.grid) {
    j["grid"].push_back({{"x1", in.x1},
                         {"y1", in.y1},
                         {"x2", in.x2},
                         {"y2", in.y2},
                         {"alpha", in.alpha}});
  }
  j["deviations"] = report.deviations;
  j["max_abs_deviation"] = report.max_abs_deviation;
  j["agreeing_fraction"] = report.agreeing_fraction;
  return j.dump(2);
}

}  // namespace qrsp
