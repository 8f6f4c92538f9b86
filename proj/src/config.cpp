#include "sociodyn/config.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>


namespace sociodyn {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw ConfigError("invalid value '" + std::string(value) + "' for key '" + std::string(key) +
                    "'");
}

double parse_double(std::string_view key, std::string_view v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out)) bad_value(key, v);
  return out;
}

int parse_int(std::string_view key, std::string_view v) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) bad_value(key, v);
  return out;
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "1" || v == "true" || v == "y" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "n" || v == "no") return false;
  bad_value(key, v);
}

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

// Shortest form that parses back to the same double.
std::string fmt_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

struct Field {
  std::function<void(SimConfig&, std::string_view key, std::string_view value)> set;
  std::function<std::string(const SimConfig&)> get;
};

template <class M>
Field double_field(M SimConfig::*m) {
  return {[m](SimConfig& c, std::string_view k, std::string_view v) { c.*m = parse_double(k, v); },
          [m](const SimConfig& c) { return fmt_double(c.*m); }};
}

template <class M>
Field int_field(M SimConfig::*m) {
  return {[m](SimConfig& c, std::string_view k, std::string_view v) { c.*m = parse_int(k, v); },
          [m](const SimConfig& c) { return std::to_string(c.*m); }};
}

template <class M>
Field bool_field(M SimConfig::*m) {
  return {[m](SimConfig& c, std::string_view k, std::string_view v) { c.*m = parse_bool(k, v); },
          [m](const SimConfig& c) { return fmt_bool(c.*m); }};
}

const std::vector<std::pair<std::string, Field>>& fields() {
  static const std::vector<std::pair<std::string, Field>> table = {
      {"pop", int_field(&SimConfig::pop)},
      {"steps", int_field(&SimConfig::steps)},
      {"world_w", double_field(&SimConfig::world_w)},
      {"world_h", double_field(&SimConfig::world_h)},
      {"n_food_patches", int_field(&SimConfig::n_food_patches)},
      {"n_mineral_patches", int_field(&SimConfig::n_mineral_patches)},
      {"food_patch_side", double_field(&SimConfig::food_patch_side)},
      {"mineral_patch_side", double_field(&SimConfig::mineral_patch_side)},
      {"patch_mode",
       {[](SimConfig& c, std::string_view k, std::string_view v) {
          if (v == "1") c.patch_mode = PatchMode::FixedRandom;
          else if (v == "2") c.patch_mode = PatchMode::FixedCentered;
          else if (v == "3" || v == "random") c.patch_mode = PatchMode::RandomSize;
          else bad_value(k, v);
        },
        [](const SimConfig& c) {
          return c.patch_mode == PatchMode::RandomSize ? std::string("random")
                                                       : std::to_string(static_cast<int>(c.patch_mode));
        }}},
      {"placement_attempts", int_field(&SimConfig::placement_attempts)},
      {"res_mode",
       {[](SimConfig& c, std::string_view k, std::string_view v) {
          if (v == "SS") c.res_mode = ResMode::SugarSpices;
          else if (v == "FS") c.res_mode = ResMode::FoodSecurity;
          else bad_value(k, v);
        },
        [](const SimConfig& c) {
          return std::string(c.res_mode == ResMode::SugarSpices ? "SS" : "FS");
        }}},
      {"division_of_labor", bool_field(&SimConfig::division_of_labor)},
      {"fmar", bool_field(&SimConfig::fmar)},
      {"price_step_fail", double_field(&SimConfig::price_step_fail)},
      {"price_step_success", double_field(&SimConfig::price_step_success)},
      {"fpro", bool_field(&SimConfig::fpro)},
      {"efc", double_field(&SimConfig::efc)},
      {"te",
       {[](SimConfig& c, std::string_view k, std::string_view v) {
          if (v.size() == 3 && (v.substr(0, 2) == "TE" || v.substr(0, 2) == "te")) v.remove_prefix(2);
          const int t = parse_int(k, v);
          if (t < 0 || t > 4) bad_value(k, v);
          c.te = static_cast<TeVariant>(t);
        },
        [](const SimConfig& c) { return std::to_string(static_cast<int>(c.te)); }}},
      {"danger", double_field(&SimConfig::danger)},
      {"culling_rule",
       {[](SimConfig& c, std::string_view k, std::string_view v) {
          if (v == "relative") c.culling_rule = CullingRule::Relative;
          else if (v == "absolute") c.culling_rule = CullingRule::Absolute;
          else bad_value(k, v);
        },
        [](const SimConfig& c) {
          return std::string(c.culling_rule == CullingRule::Relative ? "relative" : "absolute");
        }}},
      {"brc1", double_field(&SimConfig::brc1)},
      {"brc2", double_field(&SimConfig::brc2)},
      {"harvest_rate", double_field(&SimConfig::harvest_rate)},
      {"initial_money", double_field(&SimConfig::initial_money)},
      {"initial_price", double_field(&SimConfig::initial_price)},
      {"initial_endowment", double_field(&SimConfig::initial_endowment)},
      {"reserve", double_field(&SimConfig::reserve)},
      {"contact_horizon", double_field(&SimConfig::contact_horizon)},
      {"max_contacts", int_field(&SimConfig::max_contacts)},
      {"max_executions", int_field(&SimConfig::max_executions)},
      {"price_floor", double_field(&SimConfig::price_floor)},
      {"econo_t",
       {[](SimConfig& c, std::string_view k, std::string_view v) {
          if (v == "0" || v == "none") c.econo_t = Economy::None;
          else if (v == "money" || v == "2") c.econo_t = Economy::Money;
          else bad_value(k, v);
        },
        [](const SimConfig& c) { return std::string(c.econo_t == Economy::None ? "0" : "money"); }}},
  };
  return table;
}

const Field& field(std::string_view key) {
  for (const auto& [name, f] : fields()) {
    if (name == key) return f;
  }
  throw ConfigError("unknown config key '" + std::string(key) + "'");
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError("invalid config: " + what);
}

}  // namespace

void validate(const SimConfig& c) {
  require(c.pop > 0, "pop must be > 0");
  require(c.steps >= 0, "steps must be >= 0");
  require(c.world_w > 0 && c.world_h > 0, "world dimensions must be > 0");
  require(c.n_food_patches >= 0 && c.n_mineral_patches >= 0, "patch counts must be >= 0");
  require(c.food_patch_side > 0 && c.mineral_patch_side > 0, "patch sides must be > 0");
  require(c.food_patch_side <= c.world_w && c.food_patch_side <= c.world_h,
          "food patch larger than the world");
  require(c.mineral_patch_side <= c.world_w && c.mineral_patch_side <= c.world_h,
          "mineral patch larger than the world");
  require(c.placement_attempts > 0, "placement_attempts must be > 0");
  require(c.price_step_fail >= 0 && c.price_step_success >= 0, "price steps must be >= 0");
  require(!c.fpro || c.efc > 10, "fpro requires efc > 10");
  require(c.danger >= 0, "danger must be >= 0");
  require(c.brc1 >= 0 && c.brc2 >= 0, "metabolic rates must be >= 0");
  require(c.harvest_rate >= 0, "harvest_rate must be >= 0");
  require(c.initial_money >= 0, "initial_money must be >= 0");
  require(c.initial_endowment >= 0, "initial_endowment must be >= 0");
  require(c.price_floor > 0, "price_floor must be > 0");
  require(c.initial_price >= c.price_floor, "initial_price below price_floor");
  require(c.reserve >= 0, "reserve must be >= 0");
  require(c.contact_horizon >= 0, "contact_horizon must be >= 0");
  require(c.max_contacts >= 0, "max_contacts must be >= 0");
  require(c.max_executions > 0, "max_executions must be > 0");
  require(c.flexible_prices() ||
              !(c.te == TeVariant::TE2 || c.te == TeVariant::TE3 || c.te == TeVariant::TE4),
          "TE2-TE4 need flexible prices (fmar = true)");
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, f] : fields()) k.push_back(name);
    return k;
  }();
  return keys;
}

void set_config_value(SimConfig& config, std::string_view key, std::string_view value) {
  field(key).set(config, key, trim(value));
}

std::string get_config_value(const SimConfig& config, std::string_view key) {
  return field(key).get(config);
}

SimConfig parse_config(std::string_view text, SimConfig base) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    set_config_value(base, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return base;
}

SimConfig load_config_file(const std::string& path, SimConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), base);
}

std::string dump_config(const SimConfig& config) {
  std::string out;
  for (const auto& [name, f] : fields()) {
    out += name;
    out += " = ";
    out += f.get(config);
    out += '\n';
  }
  return out;
}

}  // namespace sociodyn
