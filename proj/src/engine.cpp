#include "sociodyn/engine.h"

#include <algorithm>
#include <numeric>
#include <string>

namespace sociodyn {
namespace {

template <class Pred, class OnRemove>
void remove_agents(std::vector<Agent>& agents, Pred pred, OnRemove on_remove) {
  auto keep = std::remove_if(agents.begin(), agents.end(), [&](const Agent& a) {
    if (!pred(a)) return false;
    on_remove(a);
    return true;
  });
  agents.erase(keep, agents.end());
}

void remove_starved(SimState& s) {
  remove_agents(s.agents, is_starved, [&](const Agent& a) {
    s.ledger.dead_wealth += a.wealth();
    s.ledger.dead_money += a.money;
    ++s.ledger.deaths_starved;
  });
}

void cull(SimState& s, const SimConfig& c) {
  if (s.agents.empty()) return;
  double total = 0.0;
  for (const auto& a : s.agents) total += a.minerals();
  const double mean_minerals = total / static_cast<double>(s.agents.size());
  std::vector<Agent> survivors;
  survivors.reserve(s.agents.size());
  for (auto& a : s.agents) {
    if (catastrophe_survives(a, mean_minerals, c.danger, s.rng, c.culling_rule)) {
      survivors.push_back(std::move(a));
    } else {
      s.ledger.dead_wealth += a.wealth();
      s.ledger.dead_money += a.money;
      ++s.ledger.deaths_catastrophe;
    }
  }
  s.agents = std::move(survivors);
}

// Settles at most one debt installment per debtor per step whenever a debtor
// and a lender meet.
void settle_on_contact(SimState& s, Agent& a, Agent& b, const TradePolicy& policy) {
  auto try_pay = [&](Agent& debtor, Agent& lender) {
    if (debtor.debt <= 0.0 || debtor.repaid_this_step || !can_lend(lender, policy)) return;
    s.ledger.repaid += repay_debt(debtor, lender);
    debtor.repaid_this_step = true;
  };
  try_pay(a, b);
  try_pay(b, a);
}

void record_trade(SimState& s, const TradeRecord& r) {
  s.trade_log_this_step.push_back(r);
  s.spot.record(r.resource, r.unit_price);
  ++s.ledger.trades[r.resource];
  s.ledger.credit_issued += r.credit_extended;
}

void trading_session(SimState& s, const TradePolicy& policy) {
  auto& agents = s.agents;
  for (auto& a : agents) {
    a.offered = {};
    a.sold = {};
    a.sought = {};
    a.bought = {};
    a.repaid_this_step = false;
    if (const auto k = offered_resource(a); k && a.stock[*k] - policy.reserve > kHoldingEpsilon) {
      a.offered[*k] = true;
    }
  }

  std::vector<std::size_t> order(agents.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  s.rng.shuffle(std::span(order));

  for (const std::size_t b : order) {
    Agent& buyer = agents[b];
    const auto need = needed_resource(buyer);
    if (!need) continue;
    buyer.sought[*need] = true;

    const auto contacts = select_partners(b, agents, policy, s.landscape, s.rng, s.scratch);
    int executions = 0;
    for (const std::size_t idx : contacts) {
      Agent& seller = agents[idx];
      settle_on_contact(s, buyer, seller, policy);
      if (offered_resource(seller) != need) continue;

      const auto outcome = execute_trade(buyer, seller, *need, policy, s.step);
      if (const auto* rec = std::get_if<TradeRecord>(&outcome)) {
        record_trade(s, *rec);
      } else if (std::get<TradeFailure>(outcome) == TradeFailure::NoMoney && policy.te_credit &&
                 can_lend(seller, policy)) {
        const double requested = policy.credit_budget / seller.price[*need];
        const auto rec = extend_credit(buyer, seller, *need, requested, policy, s.step);
        if (!rec) continue;
        record_trade(s, *rec);
      } else {
        continue;
      }
      if (++executions >= policy.max_executions) break;
    }
  }
}

void check_invariants(const SimState& s, const SimConfig& c) {
  auto fail = [&](const std::string& what) {
    throw InvariantViolation("step " + std::to_string(s.step) + ": " + what);
  };
  if (static_cast<int>(s.agents.size()) != c.pop) fail("population size != pop");
  for (const auto& a : s.agents) {
    const std::string who = "agent " + std::to_string(a.id) + ": ";
    if (a.age > s.step) fail(who + "age exceeds step index");
    if (a.money < 0.0) fail(who + "negative money");
    if (a.debt < 0.0) fail(who + "negative debt");
    for (const auto r : kResourceKinds) {
      if (a.price[r] < c.price_floor) fail(who + "price below floor");
    }
    if (a.age > 0 && is_starved(a)) fail(who + "starved agent survived the step");
  }
}

}  // namespace

SimState init_state(const SimConfig& config, std::uint64_t seed) {
  validate(config);
  SimState s;
  s.rng = Rng(seed);
  s.landscape = generate_landscape(config, s.rng);
  s.agents.reserve(static_cast<std::size_t>(config.pop));
  s.total_spawns += static_cast<std::uint64_t>(
      replenish_population(s.agents, config, s.rng, s.next_id));
  return s;
}

StepMetrics step(SimState& s, const SimConfig& c) {
  ++s.step;
  s.ledger = {};
  s.trade_log_this_step.clear();
  const TradePolicy policy = make_trade_policy(c);

  for (auto& a : s.agents) ++a.age;

  for (auto& a : s.agents) s.ledger.harvested += harvest(a, s.landscape, c);

  for (auto& a : s.agents) {
    metabolize(a, c);
    s.ledger.metabolized += c.brc1 + c.brc2;
  }

  remove_starved(s);

  if (c.res_mode == ResMode::FoodSecurity) cull(s, c);

  if (c.econo_t == Economy::Money) trading_session(s, policy);

  for (auto& a : s.agents) adjust_prices_end_of_session(a, policy);

  remove_starved(s);

  const std::size_t before = s.agents.size();
  s.ledger.spawned = replenish_population(s.agents, c, s.rng, s.next_id);
  for (std::size_t i = before; i < s.agents.size(); ++i) {
    s.ledger.spawned_wealth += s.agents[i].wealth();
    s.ledger.spawned_money += s.agents[i].money;
  }

  s.total_deaths_starved += static_cast<std::uint64_t>(s.ledger.deaths_starved);
  s.total_deaths_catastrophe += static_cast<std::uint64_t>(s.ledger.deaths_catastrophe);
  s.total_spawns += static_cast<std::uint64_t>(s.ledger.spawned);
  s.total_credit_issued += s.ledger.credit_issued;
  for (const auto& a : s.agents) s.gdp_cum += a.food();

  check_invariants(s, c);
  return compute_step_metrics(s, c);
}

RunResult run(const SimConfig& config, std::uint64_t seed, bool keep_trade_log) {
  SimState s = init_state(config, seed);
  RunResult out;
  out.config = config;
  out.seed = seed;
  out.landscape = s.landscape;
  out.series.reserve(static_cast<std::size_t>(config.steps));
  for (int t = 0; t < config.steps; ++t) {
    out.series.push_back(step(s, config));
    if (keep_trade_log) {
      out.trade_log.insert(out.trade_log.end(), s.trade_log_this_step.begin(),
                           s.trade_log_this_step.end());
    }
  }
  out.final_agents = std::move(s.agents);
  return out;
}

}  // namespace sociodyn
