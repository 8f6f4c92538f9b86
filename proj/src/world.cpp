#include "sociodyn/world.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace sociodyn {
namespace {

bool clashes(const Patch& candidate, const std::vector<Patch>& placed) {
  return std::any_of(placed.begin(), placed.end(), [&](const Patch& p) {
    return p.kind != candidate.kind && p.overlaps(candidate);
  });
}

Patch place_patch(ResourceKind kind, double side, const SimConfig& config, Rng& rng,
                  const std::vector<Patch>& placed) {
  for (int attempt = 0; attempt < config.placement_attempts; ++attempt) {
    Patch p;
    p.kind = kind;
    if (config.patch_mode == PatchMode::RandomSize) {
      p.side_x = side * (1.0 - rng.uniform01());
      p.side_y = side * (1.0 - rng.uniform01());
    } else {
      p.side_x = side;
      p.side_y = side;
    }
    if (config.patch_mode == PatchMode::FixedCentered && attempt < 5) {
      // centre first, then the four corners
      const double fx[] = {0.5, 0.0, 1.0, 0.0, 1.0};
      const double fy[] = {0.5, 0.0, 0.0, 1.0, 1.0};
      p.origin_x = fx[attempt] * (config.world_w - p.side_x);
      p.origin_y = fy[attempt] * (config.world_h - p.side_y);
    } else {
      p.origin_x = rng.uniform01() * (config.world_w - p.side_x);
      p.origin_y = rng.uniform01() * (config.world_h - p.side_y);
    }
    if (!clashes(p, placed)) return p;
  }
  throw PlacementError("could not place a " + std::string(to_string(kind)) + " patch after " +
                       std::to_string(config.placement_attempts) +
                       " attempts; the world is too full");
}

}  // namespace

std::vector<Patch> generate_patches(const SimConfig& config, Rng& rng) {
  std::vector<Patch> patches;
  patches.reserve(static_cast<std::size_t>(config.n_food_patches + config.n_mineral_patches));
  for (int i = 0; i < config.n_food_patches; ++i) {
    patches.push_back(place_patch(ResourceKind::Food, config.food_patch_side, config, rng, patches));
  }
  for (int i = 0; i < config.n_mineral_patches; ++i) {
    patches.push_back(
        place_patch(ResourceKind::Mineral, config.mineral_patch_side, config, rng, patches));
  }
  return patches;
}

Landscape generate_landscape(const SimConfig& config, Rng& rng) {
  return Landscape{config.world_w, config.world_h, generate_patches(config, rng)};
}

std::optional<ResourceKind> resource_at(const Landscape& landscape, double x, double y) {
  for (const auto& p : landscape.patches) {
    if (p.contains(x, y)) return p.kind;
  }
  return std::nullopt;
}

double toroidal_distance2(const Landscape& landscape, Point a, Point b) {
  double dx = std::abs(a.x - b.x);
  double dy = std::abs(a.y - b.y);
  dx = std::min(dx, landscape.width - dx);
  dy = std::min(dy, landscape.height - dy);
  return dx * dx + dy * dy;
}

double toroidal_distance(const Landscape& landscape, Point a, Point b) {
  return std::sqrt(toroidal_distance2(landscape, a, b));
}

}  // namespace sociodyn
