#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sociodyn {

enum class ResourceKind : std::uint8_t { Food = 0, Mineral = 1 };

inline constexpr std::array<ResourceKind, 2> kResourceKinds{ResourceKind::Food,
                                                            ResourceKind::Mineral};

constexpr ResourceKind other(ResourceKind k) {
  return k == ResourceKind::Food ? ResourceKind::Mineral : ResourceKind::Food;
}

std::string_view to_string(ResourceKind k);

enum class Role : std::uint8_t { Omnipotent = 0, Farmer = 1, Miner = 2, Trader = 3 };

std::string_view to_string(Role r);

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

// Holdings at or below this count as exhausted.
inline constexpr double kHoldingEpsilon = 1e-9;

/// A pair of values indexed by ResourceKind.
template <class T>
struct PerResource {
  std::array<T, 2> values{};

  constexpr T& operator[](ResourceKind k) { return values[static_cast<std::size_t>(k)]; }
  constexpr const T& operator[](ResourceKind k) const {
    return values[static_cast<std::size_t>(k)];
  }

  friend constexpr bool operator==(const PerResource&, const PerResource&) = default;
};

/// Raised for malformed configuration or invalid scenario requests.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a run breaks one of the model's internal invariants. These are
/// bugs, not model outcomes.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sociodyn
