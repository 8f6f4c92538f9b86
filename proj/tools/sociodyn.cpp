// Command-line driver: run scenarios, sweep a parameter, tabulate summaries
// and draw charts.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sociodyn/config.h"
#include "sociodyn/experiments.h"
#include "sociodyn/plot.h"
#include "sociodyn/report.h"

namespace fs = std::filesystem;
using namespace sociodyn;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;

// A preset name, or a path to a key = value config file.
ScenarioSpec resolve_scenario(const std::string& name_or_path, std::optional<int> te) {
  const auto& names = preset_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) {
    return preset(name_or_path, static_cast<TeVariant>(te.value_or(0)));
  }
  if (!fs::exists(name_or_path)) {
    throw ConfigError("'" + name_or_path + "' is neither a preset nor a config file");
  }
  ScenarioSpec spec;
  spec.name = fs::path(name_or_path).stem().string();
  spec.config = load_config_file(name_or_path);
  if (te) spec.config.te = static_cast<TeVariant>(*te);
  return spec;
}

std::vector<double> parse_values(const std::string& csv_values) {
  std::vector<double> out;
  std::stringstream ss(csv_values);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("bad sweep value '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Agent-based market simulator with a batch experiment harness"};
  app.require_subcommand(1);

  std::string scenario, out_dir, base, param, values, in_path, kind;
  std::optional<int> te;
  std::optional<int> runs, steps;
  std::uint64_t seed = 1;
  int jobs = 1;
  bool print_config = false;

  auto* run_cmd = app.add_subcommand("run", "Run one scenario over many seeds");
  run_cmd->add_option("--scenario", scenario, "Preset name (EC01..EC15) or config file")->required();
  run_cmd->add_option("--te", te, "Economic feature variant 0..4")->check(CLI::Range(0, 4));
  run_cmd->add_option("--runs", runs, "Number of runs (default 200)")->check(CLI::PositiveNumber);
  run_cmd->add_option("--steps", steps, "Steps per run")->check(CLI::NonNegativeNumber);
  run_cmd->add_option("--seed", seed, "Seed of the first run");
  run_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  run_cmd->add_option("--out", out_dir, "Output directory");
  run_cmd->add_flag("--print-config", print_config, "Print the effective config and exit");

  auto* sweep_cmd = app.add_subcommand("sweep", "Run a scenario at each value of one parameter");
  sweep_cmd->add_option("--base", base, "Preset name or config file")->required();
  sweep_cmd->add_option("--param", param, "Config key to vary")->required();
  sweep_cmd->add_option("--values", values, "Comma-separated increasing values")->required();
  sweep_cmd->add_option("--te", te, "Economic feature variant 0..4")->check(CLI::Range(0, 4));
  sweep_cmd->add_option("--runs", runs, "Runs per value (default 200)")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--steps", steps, "Steps per run")->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--seed", seed, "Seed of the first run");
  sweep_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", out_dir, "Output directory")->required();

  auto* report_cmd = app.add_subcommand("report", "Tabulate every summary.csv under a directory");
  report_cmd->add_option("--in", in_path, "Directory of run outputs")->required();
  report_cmd->add_option("--out", out_dir, "Text report file; a .csv twin is written beside it")
      ->required();

  auto* plot_cmd = app.add_subcommand("plot", "Draw an SVG chart from a CSV output");
  plot_cmd->add_option("--in", in_path, "Input CSV")->required();
  plot_cmd->add_option("--kind", kind, "price-trace | sweep | histogram")
      ->required()
      ->check(CLI::IsMember({"price-trace", "sweep", "histogram"}));
  plot_cmd->add_option("--out", out_dir, "Output SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (run_cmd->parsed()) {
      ScenarioSpec spec = resolve_scenario(scenario, te);
      if (runs) spec.n_runs = *runs;
      if (steps) spec.config.steps = *steps;
      spec.seed_base = seed;
      validate(spec);
      if (print_config) {
        if (spec.reconstructed) std::cout << "# reconstructed preset\n";
        std::cout << "# scenario " << spec.name << '\n' << dump_config(spec.config);
        return 0;
      }
      if (out_dir.empty()) throw ConfigError("--out is required unless --print-config is given");
      const auto result = run_scenario(spec, jobs);
      write_scenario_outputs(result, out_dir);
      const auto& s = result.summary;
      std::cout << s.scenario << ": runs " << s.n_runs << ", TAR " << s.tar.mean << ", Age "
                << s.age.mean << ", FPr " << s.fpr.mean << ", MPr " << s.mpr.mean << '\n';
    } else if (sweep_cmd->parsed()) {
      SweepSpec spec;
      spec.base = resolve_scenario(base, te);
      if (runs) spec.base.n_runs = *runs;
      if (steps) spec.base.config.steps = *steps;
      spec.base.seed_base = seed;
      spec.param = param;
      spec.values = parse_values(values);
      const auto result = run_sweep(spec, jobs);
      write_sweep_csv(result, fs::path(out_dir) / "sweep.csv");
      for (std::size_t i = 0; i < result.points.size(); ++i) {
        std::cout << param << " = " << spec.values[i] << ": TAR " << result.points[i].tar.mean
                  << ", Age " << result.points[i].age.mean << '\n';
      }
    } else if (report_cmd->parsed()) {
      const auto rep = emit_report(load_summaries(in_path));
      for (const auto& w : rep.warnings) std::cerr << "warning: " << w << '\n';
      fs::path text_path(out_dir);
      if (text_path.has_parent_path()) fs::create_directories(text_path.parent_path());
      fs::path csv_path = text_path;
      csv_path.replace_extension(".csv");
      if (csv_path == text_path) csv_path += ".csv";
      std::ofstream(text_path, std::ios::binary) << rep.text;
      std::ofstream(csv_path, std::ios::binary) << rep.csv;
      std::cout << rep.text;
    } else if (plot_cmd->parsed()) {
      emit_plot(in_path, parse_plot_kind(kind), out_dir);
    }
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
