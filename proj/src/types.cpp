#include "sociodyn/types.h"

namespace sociodyn {

std::string_view to_string(ResourceKind k) {
  return k == ResourceKind::Food ? "food" : "mineral";
}

std::string_view to_string(Role r) {
  switch (r) {
    case Role::Omnipotent: return "omnipotent";
    case Role::Farmer: return "farmer";
    case Role::Miner: return "miner";
    case Role::Trader: return "trader";
  }
  return "unknown";
}

}  // namespace sociodyn
