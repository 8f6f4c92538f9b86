#pragma once

#include <optional>
#include <vector>

#include "sociodyn/config.h"
#include "sociodyn/rng.h"
#include "sociodyn/types.h"

namespace sociodyn {

/// Axis-aligned rectangle of one resource, half-open on its far edges.
struct Patch {
  ResourceKind kind = ResourceKind::Food;
  double origin_x = 0.0;
  double origin_y = 0.0;
  double side_x = 0.0;
  double side_y = 0.0;
  bool replenishing = true;

  bool contains(double x, double y) const {
    return x >= origin_x && x < origin_x + side_x && y >= origin_y && y < origin_y + side_y;
  }

  bool overlaps(const Patch& o) const {
    return origin_x < o.origin_x + o.side_x && o.origin_x < origin_x + side_x &&
           origin_y < o.origin_y + o.side_y && o.origin_y < origin_y + side_y;
  }

  friend bool operator==(const Patch&, const Patch&) = default;
};

// Toroidal world. Patches never straddle the edge; only distances wrap.
struct Landscape {
  double width = 0.0;
  double height = 0.0;
  std::vector<Patch> patches;

  friend bool operator==(const Landscape&, const Landscape&) = default;
};

class PlacementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mode 1 places fixed-size patches at uniform origins, mode 2 centers each
// patch (trying the four world corners, then random origins, when the center
// would overlap the other kind), and mode 3 draws each side uniformly on (0, configured side].
// Food patches go first. A patch whose kind clashes with an already placed
// patch is redrawn, up to config.placement_attempts times.
std::vector<Patch> generate_patches(const SimConfig& config, Rng& rng);

Landscape generate_landscape(const SimConfig& config, Rng& rng);

std::optional<ResourceKind> resource_at(const Landscape& landscape, double x, double y);

double toroidal_distance(const Landscape& landscape, Point a, Point b);

/// Squared toroidal distance, for range checks without a sqrt.
double toroidal_distance2(const Landscape& landscape, Point a, Point b);

}  // namespace sociodyn
