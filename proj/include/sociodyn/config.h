#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sociodyn/types.h"

namespace sociodyn {

// SS: both resources are consumables. FS: the second resource also protects
// against catastrophe culling.
enum class ResMode { SugarSpices, FoodSecurity };

enum class PatchMode { FixedRandom = 1, FixedCentered = 2, RandomSize = 3 };

enum class CullingRule { Relative, Absolute };

// None disables all interaction between agents.
enum class Economy { None, Money };

// TE0 control, TE1 credit, TE2 sellers raise on success, TE3 buyers lower on
// success, TE4 both raise and lower.
enum class TeVariant { TE0 = 0, TE1 = 1, TE2 = 2, TE3 = 3, TE4 = 4 };

/// Every model parameter. Defaults reproduce the baseline setting of the model.
struct SimConfig {
  int pop = 500;
  int steps = 200;

  double world_w = 500.0;
  double world_h = 500.0;
  int n_food_patches = 1;
  int n_mineral_patches = 1;
  double food_patch_side = 300.0;
  double mineral_patch_side = 100.0;
  PatchMode patch_mode = PatchMode::FixedRandom;
  int placement_attempts = 10000;

  ResMode res_mode = ResMode::SugarSpices;
  bool division_of_labor = false;

  bool fmar = false;
  double price_step_fail = 0.5;
  double price_step_success = 1.0;

  bool fpro = false;
  double efc = 2.0;

  TeVariant te = TeVariant::TE0;

  double danger = 10.0;
  CullingRule culling_rule = CullingRule::Relative;

  double brc1 = 0.1;
  double brc2 = 0.1;
  double harvest_rate = 2.0;
  double initial_money = 10.0;
  double initial_price = 3.0;
  double initial_endowment = 5.0;
  double reserve = 1.0;
  double contact_horizon = 200.0;
  int max_contacts = 10;
  int max_executions = 1;
  double price_floor = 0.1;

  Economy econo_t = Economy::Money;

  bool te_credit() const { return te == TeVariant::TE1; }
  bool te_seller_raise() const { return te == TeVariant::TE2 || te == TeVariant::TE4; }
  bool te_buyer_lower() const { return te == TeVariant::TE3 || te == TeVariant::TE4; }
  bool flexible_prices() const { return fmar && price_step_fail > 0.0; }

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

/// Throws ConfigError describing the first violated constraint.
void validate(const SimConfig& config);

/// Names accepted by set_config_value, in dump order.
const std::vector<std::string>& config_keys();

/// Assigns one field from its textual form. Throws ConfigError on an unknown
/// key or an unparsable value.
void set_config_value(SimConfig& config, std::string_view key, std::string_view value);

std::string get_config_value(const SimConfig& config, std::string_view key);

/// Parses `key = value` lines on top of `base`. Blank lines and lines starting
/// with '#' are ignored.
SimConfig parse_config(std::string_view text, SimConfig base = {});

SimConfig load_config_file(const std::string& path, SimConfig base = {});

/// One `key = value` line per field; parse_config(dump_config(c)) == c.
std::string dump_config(const SimConfig& config);

}  // namespace sociodyn
