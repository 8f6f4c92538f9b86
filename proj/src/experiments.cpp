#include "sociodyn/experiments.h"

#include <charconv>
#include <fstream>
#include <map>

#include "sociodyn/csv.h"
#include "sociodyn/metrics.h"

namespace sociodyn {
namespace {

struct PresetRow {
  const char* name;
  ResMode res;
  bool division_of_labor;
  bool fmar;
  bool fpro;
  bool reconstructed;
};

constexpr ResMode SS = ResMode::SugarSpices;
constexpr ResMode FS = ResMode::FoodSecurity;

// EC01..EC03 are stand-ins (flagged reconstructed).
constexpr PresetRow kPresets[] = {
    {"EC01", SS, false, false, false, true},
    {"EC02", SS, false, true, false, true},
    {"EC03", SS, false, true, false, true},
    {"EC04", SS, false, false, false, false},
    {"EC05", SS, false, true, false, false},
    {"EC06", FS, false, false, false, false},
    {"EC07", FS, false, true, false, false},
    {"EC08", SS, true, false, false, false},
    {"EC09", SS, true, true, false, false},
    {"EC10", FS, true, false, false, false},
    {"EC11", FS, true, true, false, false},
    {"EC12", FS, false, true, true, false},
    {"EC13", SS, false, true, true, false},
    {"EC14", FS, true, true, true, false},
    {"EC15", SS, true, true, true, false},
};

// Efficiency of consumption used when flexible productivity is on: the yield
// per step equals the agent's own price.
constexpr double kFlexibleProductivityEfc = 11.0;

MetricSummary summarize(std::span<const double> xs) {
  return {stats::mean(xs), stats::stddev(xs), stats::median(xs)};
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + p.string() + "'");
  return out;
}

std::string fmt_value(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

std::string ScenarioSpec::label() const {
  return name + "_TE" + std::to_string(static_cast<int>(config.te));
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& p : kPresets) n.emplace_back(p.name);
    return n;
  }();
  return names;
}

ScenarioSpec preset(const std::string& name, TeVariant te) {
  for (const auto& p : kPresets) {
    if (name != p.name) continue;
    ScenarioSpec spec;
    spec.name = p.name;
    spec.reconstructed = p.reconstructed;
    SimConfig& c = spec.config;
    c.res_mode = p.res;
    c.division_of_labor = p.division_of_labor;
    c.fmar = p.fmar;
    c.fpro = p.fpro;
    if (p.fpro) c.efc = kFlexibleProductivityEfc;
    c.te = te;
    if (name == "EC01" || name == "EC02") c.patch_mode = PatchMode::FixedCentered;
    if (name == "EC03") c.food_patch_side = c.mineral_patch_side;
    validate(spec);
    return spec;
  }
  throw ConfigError("unknown scenario preset '" + name + "'");
}

void validate(const ScenarioSpec& spec) {
  if (spec.n_runs <= 0) throw ConfigError("n_runs must be > 0");
  const auto te = spec.config.te;
  if (!spec.config.flexible_prices() &&
      (te == TeVariant::TE2 || te == TeVariant::TE3 || te == TeVariant::TE4)) {
    throw ConfigError("scenario " + spec.name + ": TE" + std::to_string(static_cast<int>(te)) +
                      " adjusts prices on success and is not possible when prices are fixed");
  }
  validate(spec.config);
}

RunRecord summarize_run(const RunResult& result) {
  RunRecord r;
  r.seed = result.seed;
  if (!result.series.empty()) r.final = result.series.back();
  std::vector<double> spot_f, avg_f, spot_m, avg_m;
  for (const auto& m : result.series) {
    spot_f.push_back(m.spot_fpr);
    avg_f.push_back(m.mean_fpr);
    spot_m.push_back(m.spot_mpr);
    avg_m.push_back(m.mean_mpr);
  }
  r.spot_fpr_std = stats::stddev(spot_f);
  r.avg_fpr_std = stats::stddev(avg_f);
  r.spot_mpr_std = stats::stddev(spot_m);
  r.avg_mpr_std = stats::stddev(avg_m);
  for (const auto& a : result.final_agents) r.final_wealth.push_back(a.wealth());
  return r;
}

ScenarioSummary summarize_scenario(const ScenarioSpec& spec, const std::vector<RunRecord>& runs) {
  ScenarioSummary s;
  s.scenario = spec.label();
  s.config = spec.config;
  s.n_runs = static_cast<int>(runs.size());
  std::vector<double> sf, af, sm, am;
  for (const auto& r : runs) {
    s.final_tar.push_back(r.final.tar);
    s.final_age.push_back(r.final.mean_age);
    s.final_fpr.push_back(r.final.mean_fpr);
    s.final_mpr.push_back(r.final.mean_mpr);
    sf.push_back(r.spot_fpr_std);
    af.push_back(r.avg_fpr_std);
    sm.push_back(r.spot_mpr_std);
    am.push_back(r.avg_mpr_std);
  }
  s.tar = summarize(s.final_tar);
  s.age = summarize(s.final_age);
  s.fpr = summarize(s.final_fpr);
  s.mpr = summarize(s.final_mpr);
  s.spot_fpr_std = summarize(sf);
  s.avg_fpr_std = summarize(af);
  s.spot_mpr_std = summarize(sm);
  s.avg_mpr_std = summarize(am);
  if (runs.size() >= 2) s.price_comparison = stats::compare_samples(s.final_mpr, s.final_fpr);
  return s;
}

ScenarioResult run_scenario(const ScenarioSpec& spec, int jobs, bool keep_series) {
  validate(spec);
  struct One {
    RunRecord record;
    std::vector<StepMetrics> series;
    std::vector<Agent> agents;
  };
  auto outcomes = run_batch(spec.seed_base, spec.n_runs, jobs, [&](std::uint64_t seed) {
    RunResult rr = run(spec.config, seed, false);
    One o{summarize_run(rr), {}, {}};
    if (keep_series) {
      o.series = std::move(rr.series);
      o.agents = std::move(rr.final_agents);
    }
    return o;
  });

  ScenarioResult out;
  out.spec = spec;
  for (auto& o : outcomes) {
    out.runs.push_back(std::move(o.record));
    if (keep_series) {
      out.series.push_back(std::move(o.series));
      out.final_agents.push_back(std::move(o.agents));
    }
  }
  out.summary = summarize_scenario(spec, out.runs);
  return out;
}

void write_scenario_outputs(const ScenarioResult& result, const std::filesystem::path& dir,
                            double histogram_bin_width) {
  std::filesystem::create_directories(dir);
  const std::string label = result.spec.label();
  using csv::num;

  {
    auto out = open_out(dir / "steps.csv");
    out << "scenario,seed,step,tar,mean_age,mean_fpr,mean_mpr,spot_fpr,spot_mpr,total_money,"
           "total_debt,n_farmers,n_miners,n_traders,n_omnipotent,deaths_starved,"
           "deaths_catastrophe,trades_food,trades_mineral,credit_issued,gdp_cum\n";
    for (std::size_t i = 0; i < result.series.size(); ++i) {
      const auto seed = std::to_string(result.runs[i].seed);
      for (const auto& m : result.series[i]) {
        out << csv::join({label, seed, std::to_string(m.step), num(m.tar), num(m.mean_age),
                          num(m.mean_fpr), num(m.mean_mpr), num(m.spot_fpr), num(m.spot_mpr),
                          num(m.total_money), num(m.total_debt), std::to_string(m.n_farmers),
                          std::to_string(m.n_miners), std::to_string(m.n_traders),
                          std::to_string(m.n_omnipotent), std::to_string(m.deaths_starved),
                          std::to_string(m.deaths_catastrophe), std::to_string(m.trades_food),
                          std::to_string(m.trades_mineral), num(m.credit_issued),
                          num(m.gdp_cum)})
            << '\n';
      }
    }
  }
  {
    auto out = open_out(dir / "runs.csv");
    out << "scenario,seed,final_tar,final_mean_age,final_mean_fpr,final_mean_mpr,"
           "mean_spot_fpr_std,mean_avg_fpr_std\n";
    for (const auto& r : result.runs) {
      out << csv::join({label, std::to_string(r.seed), num(r.final.tar), num(r.final.mean_age),
                        num(r.final.mean_fpr), num(r.final.mean_mpr), num(r.spot_fpr_std),
                        num(r.avg_fpr_std)})
          << '\n';
    }
  }
  {
    const auto& s = result.summary;
    const auto& c = s.config;
    auto out = open_out(dir / "summary.csv");
    out << "scenario,te,res_mode,fmar,fpro,division_of_labor,n_runs,metric,mean,sd,median\n";
    const std::vector<std::pair<const char*, const MetricSummary*>> metrics = {
        {"final_tar", &s.tar},
        {"final_mean_age", &s.age},
        {"final_mean_fpr", &s.fpr},
        {"final_mean_mpr", &s.mpr},
        {"spot_fpr_std", &s.spot_fpr_std},
        {"avg_fpr_std", &s.avg_fpr_std},
        {"spot_mpr_std", &s.spot_mpr_std},
        {"avg_mpr_std", &s.avg_mpr_std},
    };
    for (const auto& [name, m] : metrics) {
      out << csv::join({result.spec.name, std::to_string(static_cast<int>(c.te)),
                        c.res_mode == ResMode::SugarSpices ? "SS" : "FS", c.fmar ? "y" : "n",
                        c.fpro ? "y" : "n", c.division_of_labor ? "y" : "n",
                        std::to_string(s.n_runs), name, num(m->mean), num(m->sd),
                        num(m->median)})
          << '\n';
    }
  }
  {
    const auto& pc = result.summary.price_comparison;
    auto out = open_out(dir / "tests.csv");
    out << "scenario,comparison,test,statistic,p_value,note\n";
    for (const auto* t : {&pc.mann_whitney, &pc.welch}) {
      out << csv::join({label, "final_mean_mpr_vs_final_mean_fpr", t->name, num(t->statistic),
                        num(t->p_value), t->valid ? t->note : "invalid: " + t->note})
          << '\n';
    }
  }
  {
    auto out = open_out(dir / "snapshot.csv");
    out << "scenario,seed,agent_id,x,y,role,food,minerals,money,debt,age,price_food,"
           "price_mineral\n";
    for (std::size_t i = 0; i < result.final_agents.size(); ++i) {
      const auto seed = std::to_string(result.runs[i].seed);
      for (const auto& a : result.final_agents[i]) {
        out << csv::join({label, seed, std::to_string(a.id), num(a.pos.x), num(a.pos.y),
                          std::string(to_string(a.role)), num(a.food()), num(a.minerals()),
                          num(a.money), num(a.debt), std::to_string(a.age),
                          num(a.price[ResourceKind::Food]),
                          num(a.price[ResourceKind::Mineral])})
            << '\n';
      }
    }
  }
  {
    std::vector<double> pooled;
    for (const auto& r : result.runs) pooled.insert(pooled.end(), r.final_wealth.begin(), r.final_wealth.end());
    const auto h = wealth_histogram(std::span<const double>(pooled), histogram_bin_width);
    auto out = open_out(dir / "histogram.csv");
    out << "scenario,bin_lo,bin_hi,count\n";
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
      out << csv::join({label, num(static_cast<double>(i) * h.bin_width),
                        num(static_cast<double>(i + 1) * h.bin_width), std::to_string(h.counts[i])})
          << '\n';
    }
  }
  {
    auto out = open_out(dir / "config.txt");
    if (result.spec.reconstructed) out << "# reconstructed preset\n";
    out << "# scenario " << result.spec.name << ", runs " << result.spec.n_runs
        << ", seed_base " << result.spec.seed_base << '\n';
    out << dump_config(result.spec.config);
  }
}

void validate(const SweepSpec& spec) {
  validate(spec.base);
  if (spec.values.empty()) throw ConfigError("sweep needs at least one value");
  for (std::size_t i = 1; i < spec.values.size(); ++i) {
    if (!(spec.values[i] > spec.values[i - 1])) {
      throw ConfigError("sweep values must be strictly increasing");
    }
  }
  SimConfig probe = spec.base.config;
  set_config_value(probe, spec.param, fmt_value(spec.values.front()));
}

SweepResult run_sweep(const SweepSpec& spec, int jobs) {
  validate(spec);
  SweepResult out;
  out.spec = spec;
  for (const double v : spec.values) {
    ScenarioSpec point = spec.base;
    set_config_value(point.config, spec.param, fmt_value(v));
    out.points.push_back(run_scenario(point, jobs, false).summary);
  }
  return out;
}

void write_sweep_csv(const SweepResult& result, const std::filesystem::path& file) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  auto out = open_out(file);
  using csv::num;
  out << "param,value,scenario,n_runs,mean_tar,mean_age,mean_fpr,mean_mpr,mean_spot_fpr_std,"
         "mean_avg_fpr_std,mean_spot_mpr_std,mean_avg_mpr_std,mpr_vs_fpr_p\n";
  for (std::size_t i = 0; i < result.points.size(); ++i) {
    const auto& p = result.points[i];
    out << csv::join({result.spec.param, num(result.spec.values[i]), p.scenario,
                      std::to_string(p.n_runs), num(p.tar.mean), num(p.age.mean), num(p.fpr.mean),
                      num(p.mpr.mean), num(p.spot_fpr_std.mean), num(p.avg_fpr_std.mean),
                      num(p.spot_mpr_std.mean), num(p.avg_mpr_std.mean),
                      num(p.price_comparison.mann_whitney.p_value)})
        << '\n';
  }
}

}  // namespace sociodyn
