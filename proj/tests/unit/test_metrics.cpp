#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "sociodyn/engine.h"
#include "sociodyn/experiments.h"
#include "sociodyn/metrics.h"
#include "sociodyn/stats.h"

using namespace sociodyn;

namespace {

TradeRecord trade(ResourceKind k, double price) {
  TradeRecord r;
  r.resource = k;
  r.unit_price = price;
  r.quantity = 1;
  return r;
}

// Textbook G1, written out independently of the library.
double g1(const std::vector<double>& x) {
  const double n = static_cast<double>(x.size());
  double m = 0;
  for (double v : x) m += v;
  m /= n;
  double m2 = 0, m3 = 0;
  for (double v : x) {
    m2 += (v - m) * (v - m);
    m3 += (v - m) * (v - m) * (v - m);
  }
  m2 /= n;
  m3 /= n;
  return std::sqrt(n * (n - 1)) / (n - 2) * m3 / std::pow(m2, 1.5);
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("fresh population") {
  SimConfig c;
  const SimState s = init_state(c, 1);
  const auto m = compute_step_metrics(s, c);
  CHECK(m.tar == 5000.0);
  CHECK(m.mean_age == 0.0);
  CHECK(m.spot_fpr == 3.0);
  CHECK(m.spot_mpr == 3.0);
  CHECK(m.mean_fpr == 3.0);
  CHECK(m.total_money == 5000.0);
  CHECK(m.n_omnipotent == 500);
}

TEST_CASE("spot price") {
  std::vector<TradeRecord> log = {trade(ResourceKind::Food, 7.0), trade(ResourceKind::Mineral, 3.0),
                                  trade(ResourceKind::Food, 1.0), trade(ResourceKind::Food, 2.0)};
  CHECK(spot_price(log, ResourceKind::Food, 3.0) == 1.5);
  CHECK(spot_price(log, ResourceKind::Mineral, 9.0) == 3.0);
  CHECK(spot_price({}, ResourceKind::Food, 3.0) == 3.0);
}

TEST_CASE("histogram of identical agents has one bin") {
  std::vector<double> w(40, 12.5);
  const auto h = wealth_histogram(w, 5.0);
  CHECK(h.total() == 40);
  CHECK(std::count_if(h.counts.begin(), h.counts.end(), [](auto c) { return c > 0; }) == 1);
  CHECK(h.counts[2] == 40);
}

TEST_CASE("histogram partitions the population") {
  Rng rng(6);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> w(1 + rng.below(700));
    for (auto& v : w) v = rng.uniform(0, 300) * rng.uniform01();
    const double width = rng.uniform(0.5, 20);
    const auto h = wealth_histogram(w, width);
    CHECK(h.total() == w.size());
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
      const auto in_bin = std::count_if(w.begin(), w.end(), [&](double v) {
        return v >= i * width && v < (i + 1) * width;
      });
      CHECK(h.counts[i] == static_cast<std::size_t>(in_bin));
    }
  }
}

TEST_CASE("population means ignore agent order and ids") {
  const SimConfig c = preset("EC09").config;
  SimState s = init_state(c, 3);
  for (int t = 0; t < 30; ++t) step(s, c);
  const auto before = compute_step_metrics(s, c);
  SimState shuffled = s;
  shuffled.rng.shuffle(std::span(shuffled.agents));
  for (auto& a : shuffled.agents) a.id += 12345;
  const auto after = compute_step_metrics(shuffled, c);
  CHECK(after.tar == doctest::Approx(before.tar).epsilon(1e-12));
  CHECK(after.mean_fpr == doctest::Approx(before.mean_fpr).epsilon(1e-12));
  CHECK(after.mean_mpr == doctest::Approx(before.mean_mpr).epsilon(1e-12));
  CHECK(after.mean_age == doctest::Approx(before.mean_age).epsilon(1e-12));
  CHECK(after.spot_fpr == before.spot_fpr);
}

TEST_CASE("final wealth of a flexible division-of-labor run is right-skewed") {
  const auto r = run(preset("EC09").config, 1);
  std::vector<double> w;
  for (const auto& a : r.final_agents) w.push_back(a.wealth());
  const double oracle = g1(w);
  CHECK(stats::skewness(w) == doctest::Approx(oracle).epsilon(1e-10));
  CHECK(oracle > 1.0);
  CHECK(wealth_histogram(r.final_agents, 5.0).total() == 500);
}

}  // TEST_SUITE
