#include "sociodyn/agents.h"

#include <algorithm>

namespace sociodyn {

bool harvests(Role role, ResourceKind kind) {
  switch (role) {
    case Role::Omnipotent: return true;
    case Role::Farmer: return kind == ResourceKind::Food;
    case Role::Miner: return kind == ResourceKind::Mineral;
    case Role::Trader: return false;
  }
  return false;
}

Agent spawn_agent(const SimConfig& config, Rng& rng, std::uint64_t id) {
  Agent a;
  a.id = id;
  a.pos.x = rng.uniform(0.0, config.world_w);
  a.pos.y = rng.uniform(0.0, config.world_h);
  a.role = config.division_of_labor ? static_cast<Role>(1 + rng.below(3)) : Role::Omnipotent;
  a.stock[ResourceKind::Food] = config.initial_endowment;
  a.stock[ResourceKind::Mineral] = config.initial_endowment;
  a.money = config.initial_money;
  a.price[ResourceKind::Food] = config.initial_price;
  a.price[ResourceKind::Mineral] = config.initial_price;
  return a;
}

double harvest(Agent& agent, const Landscape& landscape, const SimConfig& config) {
  const auto kind = resource_at(landscape, agent.pos.x, agent.pos.y);
  if (!kind || !harvests(agent.role, *kind)) return 0.0;
  const double yield = config.fpro ? (config.efc - 10.0) * agent.price[*kind] : config.harvest_rate;
  agent.stock[*kind] += yield;
  return yield;
}

void metabolize(Agent& agent, const SimConfig& config) {
  agent.stock[ResourceKind::Food] -= config.brc1;
  agent.stock[ResourceKind::Mineral] -= config.brc2;
}

bool is_starved(const Agent& agent) {
  return agent.food() <= kHoldingEpsilon || agent.minerals() <= kHoldingEpsilon;
}

bool catastrophe_survives(const Agent& agent, double mean_minerals, double danger, Rng& rng,
                          CullingRule rule) {
  const double r1 = rng.uniform01();
  const double r2 = rng.uniform01();
  if (danger <= 0.0) return true;
  if (rule == CullingRule::Absolute) return agent.minerals() - r1 * danger > 0.0;
  constexpr double kFloor = 1e-6;
  const double lhs = 100.0 * r1 / std::max(agent.minerals(), kFloor) / mean_minerals;
  const double rhs = 1000.0 * r2 / danger;
  return lhs < rhs;
}

int replenish_population(std::vector<Agent>& population, const SimConfig& config, Rng& rng,
                         std::uint64_t& next_id) {
  int added = 0;
  while (static_cast<int>(population.size()) < config.pop) {
    population.push_back(spawn_agent(config, rng, next_id++));
    ++added;
  }
  return added;
}

}  // namespace sociodyn
