#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sociodyn/config.h"
#include "sociodyn/market.h"
#include "sociodyn/state.h"

namespace sociodyn {

struct StepMetrics {
  int step = 0;
  double tar = 0.0;  // total food + minerals over live agents
  double mean_age = 0.0;
  double mean_fpr = 0.0;
  double mean_mpr = 0.0;
  double spot_fpr = 0.0;
  double spot_mpr = 0.0;
  double total_money = 0.0;
  double total_debt = 0.0;
  int n_farmers = 0;
  int n_miners = 0;
  int n_traders = 0;
  int n_omnipotent = 0;
  int deaths_starved = 0;
  int deaths_catastrophe = 0;
  int trades_food = 0;
  int trades_mineral = 0;
  double credit_issued = 0.0;
  double gdp_cum = 0.0;

  friend bool operator==(const StepMetrics&, const StepMetrics&) = default;
};

StepMetrics compute_step_metrics(const SimState& state, const SimConfig& config);

/// Mean unit price of the two most recent trades in `resource`; the single
/// price if there is one trade, `initial_price` if none.
double spot_price(std::span<const TradeRecord> trade_log, ResourceKind resource,
                  double initial_price);

struct Histogram {
  double bin_width = 1.0;
  std::vector<std::size_t> counts;  // bin i covers [i*w, (i+1)*w)

  std::size_t total() const;
};

/// Agents binned by food + minerals.
Histogram wealth_histogram(std::span<const Agent> agents, double bin_width);

Histogram wealth_histogram(std::span<const double> wealth, double bin_width);

}  // namespace sociodyn
