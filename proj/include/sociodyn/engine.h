#pragma once

#include <cstdint>
#include <vector>

#include "sociodyn/config.h"
#include "sociodyn/metrics.h"
#include "sociodyn/state.h"

namespace sociodyn {

/// Fresh landscape and a full population, all drawn from the stream of `seed`.
SimState init_state(const SimConfig& config, std::uint64_t seed);

// One step, in this order: age, harvest, metabolism, starvation, FS culling,
// trading session, end-of-session price moves, post-trade starvation,
// replenishment, metrics. Throws InvariantViolation on an internal bug.
StepMetrics step(SimState& state, const SimConfig& config);

struct RunResult {
  SimConfig config;
  std::uint64_t seed = 0;
  Landscape landscape;
  std::vector<StepMetrics> series;
  std::vector<Agent> final_agents;
  std::vector<TradeRecord> trade_log;
};

/// Runs config.steps steps; a pure function of (config, seed).
RunResult run(const SimConfig& config, std::uint64_t seed, bool keep_trade_log = true);

}  // namespace sociodyn
