#include "sociodyn/market.h"

#include <algorithm>
#include <numeric>

namespace sociodyn {

TradePolicy make_trade_policy(const SimConfig& config) {
  TradePolicy p;
  p.te_credit = config.te_credit();
  p.te_seller_raise = config.te_seller_raise();
  p.te_buyer_lower = config.te_buyer_lower();
  p.flexible = config.flexible_prices();
  p.division_of_labor = config.division_of_labor;
  p.price_step_fail = config.price_step_fail;
  p.price_step_success = config.price_step_success;
  p.reserve = config.reserve;
  p.max_contacts = config.max_contacts;
  p.max_executions = config.max_executions;
  p.contact_horizon = config.contact_horizon;
  p.price_floor = config.price_floor;
  p.credit_budget = config.initial_money;
  return p;
}

std::optional<ResourceKind> needed_resource(const Agent& agent) {
  switch (agent.role) {
    case Role::Farmer: return ResourceKind::Mineral;
    case Role::Miner: return ResourceKind::Food;
    case Role::Omnipotent:
    case Role::Trader: break;
  }
  if (agent.food() < agent.minerals()) return ResourceKind::Food;
  if (agent.minerals() < agent.food()) return ResourceKind::Mineral;
  return std::nullopt;
}

std::optional<ResourceKind> offered_resource(const Agent& agent) {
  switch (agent.role) {
    case Role::Farmer: return ResourceKind::Food;
    case Role::Miner: return ResourceKind::Mineral;
    case Role::Omnipotent:
    case Role::Trader: break;
  }
  if (agent.food() > agent.minerals()) return ResourceKind::Food;
  if (agent.minerals() > agent.food()) return ResourceKind::Mineral;
  return std::nullopt;
}

bool may_trade(const Agent& buyer, const Agent& seller) {
  if (buyer.role != seller.role) return true;
  return buyer.role == Role::Omnipotent || buyer.role == Role::Trader;
}

bool can_lend(const Agent& agent, const TradePolicy& policy) {
  return agent.role == Role::Trader ||
         (agent.role == Role::Omnipotent && !policy.division_of_labor);
}

std::vector<std::size_t> select_partners(std::size_t buyer, std::span<const Agent> agents,
                                         const TradePolicy& policy, const Landscape& landscape,
                                         Rng& rng, std::vector<std::size_t>& scratch) {
  std::vector<std::size_t> picked;
  const std::size_t n = agents.size();
  const auto cap = static_cast<std::size_t>(std::max(policy.max_contacts, 0));
  if (cap == 0 || policy.contact_horizon <= 0.0 || n < 2) return picked;
  if (scratch.size() != n) {
    scratch.resize(n);
    std::iota(scratch.begin(), scratch.end(), std::size_t{0});
  }

  // Lazy Fisher-Yates: the eligible agents met in a uniformly random
  // permutation form a uniform sample without replacement, in random order.
  const double horizon2 = policy.contact_horizon * policy.contact_horizon;
  const Agent& b = agents[buyer];
  for (std::size_t k = 0; k < n && picked.size() < cap; ++k) {
    std::swap(scratch[k], scratch[k + rng.below(n - k)]);
    const std::size_t idx = scratch[k];
    if (idx == buyer) continue;
    const Agent& s = agents[idx];
    if (toroidal_distance2(landscape, b.pos, s.pos) > horizon2) continue;
    if (!may_trade(b, s)) continue;
    picked.push_back(idx);
  }
  return picked;
}

std::vector<std::size_t> select_partners(std::size_t buyer, std::span<const Agent> agents,
                                         const TradePolicy& policy, const Landscape& landscape,
                                         Rng& rng) {
  std::vector<std::size_t> scratch;
  return select_partners(buyer, agents, policy, landscape, rng, scratch);
}

TradeOutcome execute_trade(Agent& buyer, Agent& seller, ResourceKind resource,
                           const TradePolicy& policy, int step) {
  const double unit_price = seller.price[resource];
  if (unit_price > buyer.price[resource]) return TradeFailure::PriceTooHigh;
  const double available = seller.stock[resource] - policy.reserve;
  if (available <= kHoldingEpsilon) return TradeFailure::NoStock;
  const double affordable = buyer.money / unit_price;
  if (!(affordable > kHoldingEpsilon)) return TradeFailure::NoMoney;

  double quantity = 0.0;
  double paid = 0.0;
  if (affordable <= available) {
    quantity = affordable;
    paid = buyer.money;
    buyer.money = 0.0;
    seller.stock[resource] -= quantity;
  } else {
    quantity = available;
    paid = std::min(quantity * unit_price, buyer.money);
    buyer.money -= paid;
    seller.stock[resource] = policy.reserve;
  }
  seller.money += paid;
  buyer.stock[resource] += quantity;

  buyer.bought[resource] = true;
  seller.sold[resource] = true;
  if (policy.te_seller_raise) seller.price[resource] += policy.price_step_success;
  if (policy.te_buyer_lower) {
    buyer.price[resource] =
        std::max(policy.price_floor, buyer.price[resource] - policy.price_step_success);
  }

  return TradeRecord{step, buyer.id, seller.id, resource, quantity, unit_price, paid, 0.0};
}

std::optional<TradeRecord> extend_credit(Agent& buyer, Agent& seller, ResourceKind resource,
                                         double requested_quantity, const TradePolicy& policy,
                                         int step) {
  const double given = 0.5 * requested_quantity;
  if (!(given > 0.0) || seller.stock[resource] - policy.reserve < given) return std::nullopt;
  const double unit_price = seller.price[resource];
  const double credit = given * unit_price;
  seller.stock[resource] -= given;
  buyer.stock[resource] += given;
  buyer.debt += credit;
  buyer.bought[resource] = true;
  seller.sold[resource] = true;
  return TradeRecord{step, buyer.id, seller.id, resource, given, unit_price, 0.0, credit};
}

double repay_debt(Agent& debtor, Agent& lender) {
  const double payment = std::max(0.0, std::min({kDebtInstallment, debtor.debt, debtor.money}));
  debtor.money -= payment;
  lender.money += payment;
  debtor.debt -= payment;
  return payment;
}

void adjust_prices_end_of_session(Agent& agent, const TradePolicy& policy) {
  if (!policy.flexible) return;
  for (const auto r : kResourceKinds) {
    if (agent.offered[r] && !agent.sold[r]) {
      agent.price[r] = std::max(policy.price_floor, agent.price[r] - policy.price_step_fail);
    }
    if (agent.sought[r] && !agent.bought[r]) agent.price[r] += policy.price_step_fail;
  }
}

}  // namespace sociodyn
