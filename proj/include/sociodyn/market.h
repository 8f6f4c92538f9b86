#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "sociodyn/agents.h"
#include "sociodyn/config.h"
#include "sociodyn/rng.h"
#include "sociodyn/world.h"

namespace sociodyn {

/// One executed transaction. Credit sales carry money_paid == 0.
struct TradeRecord {
  int step = 0;
  std::uint64_t buyer_id = 0;
  std::uint64_t seller_id = 0;
  ResourceKind resource = ResourceKind::Food;
  double quantity = 0.0;
  double unit_price = 0.0;
  double money_paid = 0.0;
  double credit_extended = 0.0;

  friend bool operator==(const TradeRecord&, const TradeRecord&) = default;
};

struct TradePolicy {
  bool te_credit = false;
  bool te_seller_raise = false;
  bool te_buyer_lower = false;
  bool flexible = false;
  bool division_of_labor = false;
  double price_step_fail = 0.5;
  double price_step_success = 1.0;
  double reserve = 1.0;
  int max_contacts = 10;
  int max_executions = 1;
  double contact_horizon = 200.0;
  double price_floor = 0.1;
  // Money a credit buyer is taken to want to spend; the requested quantity is
  // this amount at the seller's price.
  double credit_budget = 10.0;
};

TradePolicy make_trade_policy(const SimConfig& config);

enum class TradeFailure { PriceTooHigh, NoStock, NoMoney };

using TradeOutcome = std::variant<TradeRecord, TradeFailure>;

/// What the agent wants to buy: Farmers minerals, Miners food, others the
/// strictly scarcer holding (none on a tie).
std::optional<ResourceKind> needed_resource(const Agent& agent);

/// What the agent sells: Farmers food, Miners minerals, others the strictly
/// larger holding (none on a tie). Never the needed resource.
std::optional<ResourceKind> offered_resource(const Agent& agent);

bool may_trade(const Agent& buyer, const Agent& seller);

/// Traders lend; so do Omnipotent agents when there is no division of labor.
bool can_lend(const Agent& agent, const TradePolicy& policy);

/// Up to policy.max_contacts agents sampled without replacement, in draw
/// order, from those within the contact horizon that may trade with the buyer.
/// `scratch` holds an index permutation reused between calls; its contents on
/// entry only need to be some permutation of [0, agents.size()).
std::vector<std::size_t> select_partners(std::size_t buyer, std::span<const Agent> agents,
                                         const TradePolicy& policy, const Landscape& landscape,
                                         Rng& rng, std::vector<std::size_t>& scratch);

std::vector<std::size_t> select_partners(std::size_t buyer, std::span<const Agent> agents,
                                         const TradePolicy& policy, const Landscape& landscape,
                                         Rng& rng);

// Sells at the seller's price when it does not exceed the buyer's. The
// quantity is the largest the buyer's money and the seller's stock above the
// reserve allow. On success both agents' session flags are set and the
// success-driven price moves (seller raise, buyer lower) are applied.
TradeOutcome execute_trade(Agent& buyer, Agent& seller, ResourceKind resource,
                           const TradePolicy& policy, int step = 0);

/// Gives half the requested quantity on credit. Refused (nullopt) when the
/// seller's stock above the reserve cannot cover it.
std::optional<TradeRecord> extend_credit(Agent& buyer, Agent& seller, ResourceKind resource,
                                         double requested_quantity, const TradePolicy& policy,
                                         int step = 0);

inline constexpr double kDebtInstallment = 2.0;

/// Pays min(2, debt, money) to the lender; returns the amount paid.
double repay_debt(Agent& debtor, Agent& lender);

/// Failure-driven price moves at the end of a trading session: unsold offers
/// get cheaper, unmet wants get dearer. No-op with fixed prices.
void adjust_prices_end_of_session(Agent& agent, const TradePolicy& policy);

}  // namespace sociodyn
