#pragma once

#include <cstdint>
#include <vector>

#include "sociodyn/config.h"
#include "sociodyn/rng.h"
#include "sociodyn/types.h"
#include "sociodyn/world.h"

namespace sociodyn {

struct Agent {
  std::uint64_t id = 0;
  Point pos;
  Role role = Role::Omnipotent;
  PerResource<double> stock;  // food, minerals
  double money = 0.0;
  double debt = 0.0;
  int age = 0;
  PerResource<double> price;  // willing price per unit, one per resource

  // Trading-session scratch, reset at the start of every session.
  PerResource<bool> offered;
  PerResource<bool> sold;
  PerResource<bool> sought;
  PerResource<bool> bought;
  bool repaid_this_step = false;

  double food() const { return stock[ResourceKind::Food]; }
  double minerals() const { return stock[ResourceKind::Mineral]; }
  double wealth() const { return food() + minerals(); }

  friend bool operator==(const Agent&, const Agent&) = default;
};

bool harvests(Role role, ResourceKind kind);

Agent spawn_agent(const SimConfig& config, Rng& rng, std::uint64_t id = 0);

/// Adds this step's gathering to the agent and returns the amount gathered.
double harvest(Agent& agent, const Landscape& landscape, const SimConfig& config);

void metabolize(Agent& agent, const SimConfig& config);

bool is_starved(const Agent& agent);

// Relative rule: with r1, r2 ~ U(0,1) the agent survives iff
//   100 r1 / max(minerals, eps) / mean_minerals < 1000 r2 / danger.
// Absolute rule: survives iff minerals - r1 * danger > 0.
// danger == 0 always survives; two variates are drawn either way.
bool catastrophe_survives(const Agent& agent, double mean_minerals, double danger, Rng& rng,
                          CullingRule rule = CullingRule::Relative);

/// Appends fresh agents until the population reaches config.pop. Returns the
/// number of agents added.
int replenish_population(std::vector<Agent>& population, const SimConfig& config, Rng& rng,
                         std::uint64_t& next_id);

}  // namespace sociodyn
