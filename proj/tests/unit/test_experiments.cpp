#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sociodyn/csv.h"
#include "sociodyn/experiments.h"
#include "sociodyn/plot.h"
#include "sociodyn/report.h"

using namespace sociodyn;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("sociodyn_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

ScenarioSpec small(const std::string& name, TeVariant te = TeVariant::TE0, int runs = 4) {
  ScenarioSpec s = preset(name, te);
  s.n_runs = runs;
  s.config.steps = 40;
  return s;
}

}  // namespace

TEST_SUITE("experiments") {

TEST_CASE("preset grid") {
  struct Row {
    const char* name;
    ResMode res;
    bool dl, fmar, fpro;
  };
  const Row rows[] = {
      {"EC04", ResMode::SugarSpices, false, false, false}, {"EC05", ResMode::SugarSpices, false, true, false},
      {"EC13", ResMode::SugarSpices, false, true, true},   {"EC06", ResMode::FoodSecurity, false, false, false},
      {"EC07", ResMode::FoodSecurity, false, true, false}, {"EC12", ResMode::FoodSecurity, false, true, true},
      {"EC08", ResMode::SugarSpices, true, false, false},  {"EC09", ResMode::SugarSpices, true, true, false},
      {"EC15", ResMode::SugarSpices, true, true, true},    {"EC10", ResMode::FoodSecurity, true, false, false},
      {"EC11", ResMode::FoodSecurity, true, true, false},  {"EC14", ResMode::FoodSecurity, true, true, true}};
  for (const auto& r : rows) {
    CAPTURE(r.name);
    const auto s = preset(r.name);
    CHECK(s.config.res_mode == r.res);
    CHECK(s.config.division_of_labor == r.dl);
    CHECK(s.config.fmar == r.fmar);
    CHECK(s.config.fpro == r.fpro);
    CHECK(s.config.flexible_prices() == r.fmar);
    CHECK_FALSE(s.reconstructed);
    CHECK(s.n_runs == 200);
    CHECK_NOTHROW(validate(s));
  }
  CHECK(preset("EC01").reconstructed);
  CHECK(preset("EC09", TeVariant::TE2).label() == "EC09_TE2");
  CHECK(preset_names().size() == 15);
}

TEST_CASE("preset errors") {
  CHECK_THROWS_AS(preset("EC99"), ConfigError);
  CHECK_THROWS_AS(preset("EC04", TeVariant::TE2), ConfigError);
  CHECK_THROWS_AS(preset("EC08", TeVariant::TE4), ConfigError);
  CHECK_NOTHROW(preset("EC08", TeVariant::TE1));
}

TEST_CASE("outputs are identical for 1 and 4 workers") {
  const auto spec = small("EC09", TeVariant::TE1);
  const auto d1 = scratch_dir("jobs1"), d4 = scratch_dir("jobs4");
  write_scenario_outputs(run_scenario(spec, 1), d1);
  write_scenario_outputs(run_scenario(spec, 4), d4);
  for (const char* f : {"steps.csv", "runs.csv", "summary.csv", "tests.csv", "snapshot.csv",
                        "histogram.csv", "config.txt"}) {
    CAPTURE(f);
    CHECK(slurp(d1 / f) == slurp(d4 / f));
    CHECK_FALSE(slurp(d1 / f).empty());
  }
}

TEST_CASE("csv schemas") {
  const auto spec = small("EC05", TeVariant::TE0, 2);
  const auto dir = scratch_dir("schema");
  write_scenario_outputs(run_scenario(spec, 1), dir);
  const auto steps = csv::read(dir / "steps.csv");
  CHECK(csv::join(steps.header) ==
        "scenario,seed,step,tar,mean_age,mean_fpr,mean_mpr,spot_fpr,spot_mpr,total_money,"
        "total_debt,n_farmers,n_miners,n_traders,n_omnipotent,deaths_starved,deaths_catastrophe,"
        "trades_food,trades_mineral,credit_issued,gdp_cum");
  CHECK(steps.rows.size() == 80);
  const auto runs = csv::read(dir / "runs.csv");
  CHECK(csv::join(runs.header) ==
        "scenario,seed,final_tar,final_mean_age,final_mean_fpr,final_mean_mpr,mean_spot_fpr_std,"
        "mean_avg_fpr_std");
  CHECK(runs.rows.size() == 2);
  const auto snap = csv::read(dir / "snapshot.csv");
  CHECK(csv::join(snap.header) ==
        "scenario,seed,agent_id,x,y,role,food,minerals,money,debt,age,price_food,price_mineral");
  CHECK(snap.rows.size() == 1000);
  CHECK(csv::read(dir / "histogram.csv").header.front() == "scenario");
  CHECK_THROWS_AS(steps.column("nope"), ConfigError);
}

TEST_CASE("a single seed reproduces its rows in isolation") {
  auto spec = small("EC11", TeVariant::TE0, 3);
  const auto all = run_scenario(spec, 2);
  spec.seed_base = 3;
  spec.n_runs = 1;
  const auto one = run_scenario(spec, 1);
  CHECK(one.series[0] == all.series[2]);
  CHECK(one.runs[0].final == all.runs[2].final);
}

TEST_CASE("summaries are reproducible from the per-run values") {
  const auto r = run_scenario(small("EC09", TeVariant::TE0, 6), 2);
  const auto& s = r.summary;
  CHECK(s.n_runs == 6);
  REQUIRE(s.final_tar.size() == 6);
  CHECK(s.tar.mean == doctest::Approx(stats::mean(s.final_tar)));
  CHECK(s.age.median == doctest::Approx(stats::median(s.final_age)));
  CHECK(s.final_tar[0] == r.runs[0].final.tar);
}

TEST_CASE("sweep") {
  SweepSpec sw;
  sw.base = small("EC07", TeVariant::TE0, 2);
  sw.param = "contact_horizon";
  sw.values = {10, 25, 50, 100, 200, 400};
  const auto res = run_sweep(sw, 2);
  CHECK(res.points.size() == 6);
  CHECK(res.points[0].config.contact_horizon == 10);
  const auto dir = scratch_dir("sweep");
  write_sweep_csv(res, dir / "sweep.csv");
  const auto t = csv::read(dir / "sweep.csv");
  CHECK(t.rows.size() == 6);
  CHECK(t.header[0] == "param");

  SweepSpec one = sw;
  one.values = {50};
  auto direct = sw.base;
  direct.config.contact_horizon = 50;
  const auto a = run_sweep(one, 1).points[0];
  const auto b = run_scenario(direct, 1).summary;
  CHECK(a.final_tar == b.final_tar);
  CHECK(a.final_mpr == b.final_mpr);

  SweepSpec unordered = sw;
  unordered.values = {10, 10};
  CHECK_THROWS_AS(validate(unordered), ConfigError);
  SweepSpec unknown = sw;
  unknown.param = "gravity";
  CHECK_THROWS_AS(validate(unknown), ConfigError);
}

TEST_CASE("report over the full grid has twelve wealth rows") {
  const auto root = scratch_dir("grid");
  for (const auto& name : {"EC04", "EC05", "EC06", "EC07", "EC08", "EC09", "EC10", "EC11", "EC12",
                           "EC13", "EC14", "EC15"}) {
    auto spec = small(name, TeVariant::TE0, 1);
    spec.config.steps = 5;
    write_scenario_outputs(run_scenario(spec, 1), root / name);
  }
  const auto rep = emit_report(load_summaries(root));
  std::istringstream lines(rep.csv);
  std::string line;
  int tar_rows = 0;
  while (std::getline(lines, line)) tar_rows += line.rfind("tar_thousands,", 0) == 0;
  CHECK(tar_rows == 12);
  CHECK(rep.text.find("EC04") != std::string::npos);
  CHECK(rep.csv.find("tar_thousands,omnipotent,SS,n,n,EC04,") != std::string::npos);
  // TE2 under fixed prices is not applicable, TE2 under flexible prices is merely missing
  CHECK(rep.csv.find("EC08,") != std::string::npos);
  const auto ec08 = rep.csv.substr(rep.csv.find("tar_thousands,division,SS,n,n,EC08"));
  CHECK(ec08.substr(0, ec08.find('\n')).find(",n/a,n/a,n/a") != std::string::npos);
  CHECK_FALSE(rep.warnings.empty());
}

TEST_CASE("report of one scenario is one row") {
  const auto root = scratch_dir("single");
  auto spec = small("EC09", TeVariant::TE0, 1);
  write_scenario_outputs(run_scenario(spec, 1), root);
  const auto rep = emit_report(load_summaries(root));
  std::istringstream lines(rep.csv);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) rows += line.rfind("tar_thousands,", 0) == 0;
  CHECK(rows == 1);
}

TEST_CASE("plots") {
  const auto dir = scratch_dir("plots");
  write_scenario_outputs(run_scenario(small("EC09", TeVariant::TE0, 1), 1), dir);
  emit_plot(dir / "steps.csv", PlotKind::PriceTrace, dir / "price.svg");
  emit_plot(dir / "histogram.csv", PlotKind::Histogram, dir / "hist.svg");
  for (const char* f : {"price.svg", "hist.svg"}) {
    const auto svg = slurp(dir / f);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
  }
  const auto first = slurp(dir / "price.svg");
  emit_plot(dir / "steps.csv", PlotKind::PriceTrace, dir / "price2.svg");
  CHECK(first == slurp(dir / "price2.svg"));

  // a steps file is not a sweep file
  try {
    emit_plot(dir / "steps.csv", PlotKind::Sweep, dir / "bad.svg");
    FAIL("expected a schema error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_plot_kind("pie"), ConfigError);
}

}  // TEST_SUITE
