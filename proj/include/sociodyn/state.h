#pragma once

#include <cstdint>
#include <vector>

#include "sociodyn/agents.h"
#include "sociodyn/market.h"
#include "sociodyn/rng.h"
#include "sociodyn/world.h"

namespace sociodyn {

/// The two most recent executed unit prices of each resource.
struct SpotTracker {
  PerResource<double> last;
  PerResource<double> previous;
  PerResource<std::uint64_t> count;

  void record(ResourceKind k, double unit_price) {
    previous[k] = last[k];
    last[k] = unit_price;
    ++count[k];
  }

  double value(ResourceKind k, double initial_price) const {
    if (count[k] >= 2) return 0.5 * (last[k] + previous[k]);
    if (count[k] == 1) return last[k];
    return initial_price;
  }

  friend bool operator==(const SpotTracker&, const SpotTracker&) = default;
};

/// Flows of resources and money during one step, for ledger checks.
struct StepLedger {
  double harvested = 0.0;
  double metabolized = 0.0;
  double dead_wealth = 0.0;
  double dead_money = 0.0;
  double spawned_wealth = 0.0;
  double spawned_money = 0.0;
  double repaid = 0.0;
  int deaths_starved = 0;
  int deaths_catastrophe = 0;
  int spawned = 0;
  double credit_issued = 0.0;
  PerResource<int> trades;

  friend bool operator==(const StepLedger&, const StepLedger&) = default;
};

struct SimState {
  int step = 0;
  Landscape landscape;
  std::vector<Agent> agents;
  std::vector<TradeRecord> trade_log_this_step;
  SpotTracker spot;
  StepLedger ledger;
  double gdp_cum = 0.0;
  std::uint64_t total_deaths_starved = 0;
  std::uint64_t total_deaths_catastrophe = 0;
  std::uint64_t total_spawns = 0;
  double total_credit_issued = 0.0;
  std::uint64_t next_id = 0;
  Rng rng;
  std::vector<std::size_t> scratch;  // partner-sampling permutation
};

}  // namespace sociodyn
