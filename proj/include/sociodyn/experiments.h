#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "sociodyn/config.h"
#include "sociodyn/engine.h"
#include "sociodyn/stats.h"

namespace sociodyn {

struct ScenarioSpec {
  std::string name = "custom";
  SimConfig config;
  int n_runs = 200;
  std::uint64_t seed_base = 1;
  bool reconstructed = false;  // stand-in settings

  /// Scenario label used in CSV rows, e.g. "EC09_TE2".
  std::string label() const;
};

/// EC01..EC15 names known to preset().
const std::vector<std::string>& preset_names();

/// Named preset at the given TE variant. Throws ConfigError for unknown names
/// or TE2-TE4 on a fixed-price preset.
ScenarioSpec preset(const std::string& name, TeVariant te = TeVariant::TE0);

/// Throws ConfigError unless the spec is runnable.
void validate(const ScenarioSpec& spec);

/// Condensed outcome of one run.
struct RunRecord {
  std::uint64_t seed = 0;
  StepMetrics final;
  double spot_fpr_std = 0.0;
  double avg_fpr_std = 0.0;
  double spot_mpr_std = 0.0;
  double avg_mpr_std = 0.0;
  std::vector<double> final_wealth;  // food + minerals per live agent
};

RunRecord summarize_run(const RunResult& result);

struct MetricSummary {
  double mean = 0.0;
  double sd = 0.0;
  double median = 0.0;
};

struct ScenarioSummary {
  std::string scenario;
  SimConfig config;
  int n_runs = 0;
  std::vector<double> final_tar;
  std::vector<double> final_age;
  std::vector<double> final_fpr;
  std::vector<double> final_mpr;
  MetricSummary tar, age, fpr, mpr;
  MetricSummary spot_fpr_std, avg_fpr_std, spot_mpr_std, avg_mpr_std;
  // MPr against FPr across runs.
  stats::SampleComparison price_comparison;
};

ScenarioSummary summarize_scenario(const ScenarioSpec& spec, const std::vector<RunRecord>& runs);

/// Runs `count` seeds starting at `seed_base` over `jobs` workers and returns
/// the results in seed order. `fn` must be safe to call concurrently.
template <class Fn>
auto run_batch(std::uint64_t seed_base, int count, int jobs, Fn fn)
    -> std::vector<decltype(fn(std::uint64_t{}))>;

struct ScenarioResult {
  ScenarioSpec spec;
  std::vector<RunRecord> runs;
  std::vector<std::vector<StepMetrics>> series;  // per run, when kept
  std::vector<std::vector<Agent>> final_agents;  // per run, when kept
  ScenarioSummary summary;
};

/// n_runs independent runs with seeds seed_base + i. The result does not
/// depend on `jobs`.
ScenarioResult run_scenario(const ScenarioSpec& spec, int jobs, bool keep_series = true);

// Writes steps.csv, runs.csv, summary.csv, snapshot.csv, histogram.csv and
// config.txt into `dir`.
void write_scenario_outputs(const ScenarioResult& result, const std::filesystem::path& dir,
                            double histogram_bin_width = 5.0);

struct SweepSpec {
  ScenarioSpec base;
  std::string param;
  std::vector<double> values;
};

void validate(const SweepSpec& spec);

struct SweepResult {
  SweepSpec spec;
  std::vector<ScenarioSummary> points;
};

SweepResult run_sweep(const SweepSpec& spec, int jobs);

void write_sweep_csv(const SweepResult& result, const std::filesystem::path& file);

}  // namespace sociodyn

#include "sociodyn/detail/batch.h"
