#include "sociodyn/metrics.h"

#include <algorithm>
#include <cmath>

namespace sociodyn {

StepMetrics compute_step_metrics(const SimState& state, const SimConfig& config) {
  StepMetrics m;
  m.step = state.step;
  double age = 0.0, fpr = 0.0, mpr = 0.0;
  for (const auto& a : state.agents) {
    m.tar += a.wealth();
    age += a.age;
    fpr += a.price[ResourceKind::Food];
    mpr += a.price[ResourceKind::Mineral];
    m.total_money += a.money;
    m.total_debt += a.debt;
    switch (a.role) {
      case Role::Farmer: ++m.n_farmers; break;
      case Role::Miner: ++m.n_miners; break;
      case Role::Trader: ++m.n_traders; break;
      case Role::Omnipotent: ++m.n_omnipotent; break;
    }
  }
  if (!state.agents.empty()) {
    const auto n = static_cast<double>(state.agents.size());
    m.mean_age = age / n;
    m.mean_fpr = fpr / n;
    m.mean_mpr = mpr / n;
  }
  m.spot_fpr = state.spot.value(ResourceKind::Food, config.initial_price);
  m.spot_mpr = state.spot.value(ResourceKind::Mineral, config.initial_price);
  m.deaths_starved = state.ledger.deaths_starved;
  m.deaths_catastrophe = state.ledger.deaths_catastrophe;
  m.trades_food = state.ledger.trades[ResourceKind::Food];
  m.trades_mineral = state.ledger.trades[ResourceKind::Mineral];
  m.credit_issued = state.ledger.credit_issued;
  m.gdp_cum = state.gdp_cum;
  return m;
}

double spot_price(std::span<const TradeRecord> trade_log, ResourceKind resource,
                  double initial_price) {
  double latest[2];
  int found = 0;
  for (auto it = trade_log.rbegin(); it != trade_log.rend() && found < 2; ++it) {
    if (it->resource == resource) latest[found++] = it->unit_price;
  }
  if (found == 2) return 0.5 * (latest[0] + latest[1]);
  if (found == 1) return latest[0];
  return initial_price;
}

std::size_t Histogram::total() const {
  std::size_t t = 0;
  for (const auto c : counts) t += c;
  return t;
}

Histogram wealth_histogram(std::span<const double> wealth, double bin_width) {
  Histogram h;
  h.bin_width = bin_width;
  for (const double w : wealth) {
    const auto bin = static_cast<std::size_t>(std::max(0.0, std::floor(w / bin_width)));
    if (bin >= h.counts.size()) h.counts.resize(bin + 1, 0);
    ++h.counts[bin];
  }
  return h;
}

Histogram wealth_histogram(std::span<const Agent> agents, double bin_width) {
  std::vector<double> wealth;
  wealth.reserve(agents.size());
  for (const auto& a : agents) wealth.push_back(a.wealth());
  return wealth_histogram(std::span<const double>(wealth), bin_width);
}

}  // namespace sociodyn
