#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrsp/analysis.hpp"
#include "qrsp/closed_form.hpp"
#include "qrsp/verify.hpp"

namespace {

using qrsp::ChannelKind;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

qrsp::PayoffMatrix load_payoff_matrix(const std::string& config_path) {
  if (config_path.empty()) return qrsp::PayoffMatrix::rsp();
  std::ifstream in(config_path);
  if (!in) throw std::runtime_error("cannot open config file: " + config_path);
  nlohmann::json j = nlohmann::json::parse(in);
  if (!j.contains("payoff_matrix")) return qrsp::PayoffMatrix::rsp();
  const auto& rows = j.at("payoff_matrix");
  if (rows.size() != 3) throw std::runtime_error("payoff_matrix needs 3 rows");
  qrsp::PayoffMatrix m;
  for (int i = 0; i < 3; ++i) {
    if (rows[i].size() != 3)
      throw std::runtime_error("payoff_matrix rows need 3 [alice, bob] pairs");
    for (int c = 0; c < 3; ++c) {
      m.alice[i][c] = rows[i][c].at(0).get<double>();
      m.bob[i][c] = rows[i][c].at(1).get<double>();
    }
  }
  return m;
}

std::vector<ChannelKind> parse_channels(const std::string& list) {
  std::vector<ChannelKind> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(qrsp::channel_from_string(item));
  }
  if (out.empty()) throw std::runtime_error("empty channel list");
  return out;
}

qrsp::AxisRange parse_vary(const std::string& arg) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos)
    throw std::runtime_error("--vary expects axis=start:stop:step");
  qrsp::AxisRange r;
  r.axis = qrsp::axis_from_string(arg.substr(0, eq));
  const std::string rest = arg.substr(eq + 1);
  const auto c1 = rest.find(':');
  const auto c2 = rest.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::runtime_error("--vary expects axis=start:stop:step");
  r.start = std::stod(rest.substr(0, c1));
  r.stop = std::stod(rest.substr(c1 + 1, c2 - c1 - 1));
  r.step = std::stod(rest.substr(c2 + 1));
  return r;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

void emit_surface(const qrsp::PayoffSurface& surface, const std::string& format,
                  std::ostream& out) {
  if (format == "csv") {
    qrsp::write_csv(surface, out);
    return;
  }
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const qrsp::SurfaceRow& row : surface.rows) {
    nlohmann::ordered_json r;
    for (std::size_t i = 0; i < row.axis_values.size(); ++i) {
      r[qrsp::to_string(surface.spec.varying[i].axis)] = row.axis_values[i];
    }
    r["channel"] = qrsp::to_string(row.channel);
    r["payoff_alice"] = row.alice;
    r["payoff_bob"] = row.bob;
    rows.push_back(std::move(r));
  }
  out << rows.dump(2) << '\n';
}

nlohmann::ordered_json kraus_json(const qrsp::KrausSet& k) {
  nlohmann::ordered_json j;
  j["dim"] = k.dim;
  j["alpha"] = k.alpha;
  j["completeness_residual"] = qrsp::check_completeness(k);
  j["operators"] = nlohmann::ordered_json::array();
  for (const qrsp::MatrixX& e : k.operators) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int r = 0; r < e.rows(); ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int c = 0; c < e.cols(); ++c) {
        row.push_back({e(r, c).real(), e(r, c).imag()});
      }
      rows.push_back(std::move(row));
    }
    j["operators"].push_back(std::move(rows));
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noisy two-qutrit rock-scissors-paper game simulator"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON config with an optional payoff_matrix");

  // payoff
  auto* cmd_payoff = app.add_subcommand("payoff", "Evaluate both payoffs");
  double x1 = 0, y1 = 0, x2 = 0, y2 = 0, alpha = 0;
  std::string channel = "none";
  cmd_payoff->add_option("--x1", x1)->required();
  cmd_payoff->add_option("--y1", y1)->required();
  cmd_payoff->add_option("--x2", x2)->required();
  cmd_payoff->add_option("--y2", y2)->required();
  cmd_payoff->add_option("--channel", channel, "ad|pd|dep|none")->required();
  cmd_payoff->add_option("--alpha", alpha)->required();

  // sweep
  auto* cmd_sweep = app.add_subcommand("sweep", "Payoff surface over a grid");
  std::vector<std::string> vary_args;
  std::vector<std::string> fix_args;
  std::string channels_arg = "ad,dep,pd";
  std::string format = "csv";
  std::string output_path;
  cmd_sweep->add_option("--vary", vary_args, "axis=start:stop:step (1 or 2)")
      ->required()
      ->expected(1, 2);
  cmd_sweep->add_option("--fix", fix_args, "axis=value");
  cmd_sweep->add_option("--channels", channels_arg, "comma-separated list");
  cmd_sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  cmd_sweep->add_option("--output,-o", output_path, "file path or - for stdout");

  // figure
  auto* cmd_figure = app.add_subcommand("figure", "Reproduce a published figure grid");
  int figure_number = 1;
  std::optional<double> figure_step;
  cmd_figure->add_option("number", figure_number, "1..6")->required();
  cmd_figure->add_option("--step", figure_step, "varying-axis resolution");
  cmd_figure->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  cmd_figure->add_option("--output,-o", output_path);

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "Run the invariant suite");
  bool dump_kraus = false;
  double dump_alpha = 0.5;
  cmd_verify->add_flag("--dump-kraus", dump_kraus, "dump Kraus sets as JSON");
  cmd_verify->add_option("--alpha", dump_alpha, "alpha used for --dump-kraus");

  // compare
  auto* cmd_compare =
      app.add_subcommand("compare", "Closed form vs simulation report");
  std::string compare_channel;
  std::string grid_name = "coarse";
  cmd_compare->add_option("--channel", compare_channel, "ad|pd|dep")->required();
  cmd_compare->add_option("--grid", grid_name)
      ->check(CLI::IsMember({"coarse", "fine"}));
  cmd_compare->add_option("--output,-o", output_path);

  // nash
  auto* cmd_nash = app.add_subcommand("nash", "Grid equilibrium search");
  std::string nash_channel = "none";
  double nash_alpha = 0.0;
  double nash_step = std::numbers::pi / 20.0;
  cmd_nash->add_option("--channel", nash_channel, "ad|pd|dep|none");
  cmd_nash->add_option("--alpha", nash_alpha);
  cmd_nash->add_option("--step", nash_step, "grid step, must divide pi/2");
  cmd_nash->add_option("--output,-o", output_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    const qrsp::PayoffMatrix table = load_payoff_matrix(config_path);
    std::ofstream file;

    if (cmd_payoff->parsed()) {
      const qrsp::PayoffResult r =
          qrsp::payoff({x1, y1}, {x2, y2},
                       qrsp::channel_from_string(channel), alpha, table);
      std::cout << "alice=" << fmt(r.alice) << " bob=" << fmt(r.bob) << '\n';
      return 0;
    }

    if (cmd_sweep->parsed()) {
      qrsp::SweepSpec spec;
      spec.payoff_matrix = table;
      for (const std::string& v : vary_args) spec.varying.push_back(parse_vary(v));
      for (const std::string& f : fix_args) {
        const auto eq = f.find('=');
        if (eq == std::string::npos)
          throw std::runtime_error("--fix expects axis=value");
        const double value = std::stod(f.substr(eq + 1));
        switch (qrsp::axis_from_string(f.substr(0, eq))) {
          case qrsp::Axis::X1: spec.x1 = value; break;
          case qrsp::Axis::Y1: spec.y1 = value; break;
          case qrsp::Axis::X2: spec.x2 = value; break;
          case qrsp::Axis::Y2: spec.y2 = value; break;
          case qrsp::Axis::Alpha: spec.alpha = value; break;
        }
      }
      spec.channels = parse_channels(channels_arg);
      emit_surface(qrsp::sweep(spec), format, open_output(output_path, file));
      return 0;
    }

    if (cmd_figure->parsed()) {
      qrsp::SweepSpec spec = qrsp::figure_spec(figure_number, figure_step);
      spec.payoff_matrix = table;
      emit_surface(qrsp::sweep(spec), format, open_output(output_path, file));
      return 0;
    }

    if (cmd_verify->parsed()) {
      if (dump_kraus) {
        nlohmann::ordered_json j;
        for (ChannelKind kind :
             {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping,
              ChannelKind::Depolarizing}) {
          const qrsp::KrausSet k = qrsp::make_kraus(kind, dump_alpha);
          j[qrsp::to_string(kind)]["single_qutrit"] = kraus_json(k);
          j[qrsp::to_string(kind)]["lifted"] = kraus_json(qrsp::lift_two_qutrit(k));
        }
        std::cout << j.dump(2) << '\n';
      }
      bool all_pass = true;
      for (const qrsp::CheckResult& r : qrsp::run_verification()) {
        const char* status = r.asserted ? (r.pass ? "PASS" : "FAIL") : "INFO";
        all_pass = all_pass && r.ok();
        std::printf("%-4s  %-55s  %.6g  %s\n", status, r.name.c_str(), r.value,
                    r.detail.c_str());
      }
      return all_pass ? 0 : 1;
    }

    if (cmd_compare->parsed()) {
      const ChannelKind kind = qrsp::channel_from_string(compare_channel);
      const qrsp::CompareGrid grid = grid_name == "fine"
                                         ? qrsp::CompareGrid::fine()
                                         : qrsp::CompareGrid::coarse();
      const qrsp::DiscrepancyReport report =
          qrsp::compare_closed_vs_sim(kind, grid, table);
      open_output(output_path, file) << qrsp::to_json(report) << '\n';
      return 0;
    }

    if (cmd_nash->parsed()) {
      const auto candidates = qrsp::find_equilibria(
          qrsp::channel_from_string(nash_channel), nash_alpha, nash_step, table);
      std::ostream& out = open_output(output_path, file);
      out << "x1,y1,x2,y2,best_response_gap\n";
      for (const qrsp::EquilibriumCandidate& c : candidates) {
        out << fmt(c.a.x) << ',' << fmt(c.a.y) << ',' << fmt(c.b.x) << ','
            << fmt(c.b.y) << ',' << fmt(c.best_response_gap) << '\n';
      }
      return 0;
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
