#include <cmath>

#include "doctest.h"
#include "sociodyn/world.h"

using namespace sociodyn;

namespace {

Landscape square(double side) { return Landscape{side, side, {}}; }

}  // namespace

TEST_SUITE("world") {

TEST_CASE("no patches requested gives an empty layout") {
  SimConfig c;
  c.n_food_patches = 0;
  c.n_mineral_patches = 0;
  Rng rng(3);
  CHECK(generate_patches(c, rng).empty());
}

TEST_CASE("default layout is one 300 food patch and one 100 mineral patch, disjoint") {
  SimConfig c;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Rng rng(seed);
    const auto patches = generate_patches(c, rng);
    REQUIRE(patches.size() == 2);
    CHECK(patches[0].kind == ResourceKind::Food);
    CHECK(patches[0].side_x == 300.0);
    CHECK(patches[0].side_y == 300.0);
    CHECK(patches[1].kind == ResourceKind::Mineral);
    CHECK(patches[1].side_x == 100.0);
    CHECK_FALSE(patches[0].overlaps(patches[1]));
    for (const auto& p : patches) {
      CHECK(p.origin_x >= 0.0);
      CHECK(p.origin_y >= 0.0);
      CHECK(p.origin_x + p.side_x <= c.world_w);
      CHECK(p.origin_y + p.side_y <= c.world_h);
    }
  }
}

TEST_CASE("centered mode puts a lone 300 patch at (100,100)") {
  SimConfig c;
  c.patch_mode = PatchMode::FixedCentered;
  c.n_mineral_patches = 0;
  Rng rng(1);
  const auto patches = generate_patches(c, rng);
  REQUIRE(patches.size() == 1);
  // centre of patch equals centre of world
  CHECK(patches[0].origin_x + patches[0].side_x / 2 == doctest::Approx(c.world_w / 2));
  CHECK(patches[0].origin_x == 100.0);
  CHECK(patches[0].origin_y == 100.0);
}

TEST_CASE("centered mode moves the second kind off the centre when it would overlap") {
  SimConfig c;
  c.patch_mode = PatchMode::FixedCentered;
  Rng rng(9);
  const auto patches = generate_patches(c, rng);
  REQUIRE(patches.size() == 2);
  CHECK(patches[0].origin_x == 100.0);
  CHECK_FALSE(patches[0].overlaps(patches[1]));
  // the only room left for a 100 patch is a corner
  CHECK(patches[1].origin_x == 0.0);
  CHECK(patches[1].origin_y == 0.0);
}

TEST_CASE("random-size mode keeps sides in (0, max] and never overlaps") {
  SimConfig c;
  c.patch_mode = PatchMode::RandomSize;
  c.n_food_patches = 3;
  c.n_mineral_patches = 3;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Rng rng(seed);
    const auto patches = generate_patches(c, rng);
    for (const auto& p : patches) {
      const double cap = p.kind == ResourceKind::Food ? 300.0 : 100.0;
      CHECK(p.side_x > 0.0);
      CHECK(p.side_x <= cap);
      CHECK(p.side_y > 0.0);
      CHECK(p.side_y <= cap);
    }
    for (std::size_t i = 0; i < patches.size(); ++i) {
      for (std::size_t j = i + 1; j < patches.size(); ++j) {
        if (patches[i].kind != patches[j].kind) CHECK_FALSE(patches[i].overlaps(patches[j]));
      }
    }
  }
}

TEST_CASE("an over-full world fails placement") {
  SimConfig c;
  c.food_patch_side = 450;
  c.mineral_patch_side = 450;
  c.placement_attempts = 200;
  Rng rng(1);
  CHECK_THROWS_AS(generate_patches(c, rng), PlacementError);
}

TEST_CASE("layout is a function of the seed") {
  SimConfig c;
  c.n_food_patches = 2;
  c.n_mineral_patches = 2;
  Rng a(77), b(77), other(78);
  const auto pa = generate_patches(c, a);
  CHECK(pa == generate_patches(c, b));
  CHECK_FALSE(pa == generate_patches(c, other));
}

TEST_CASE("resource_at") {
  Landscape l{500, 500, {Patch{ResourceKind::Food, 10, 20, 300, 300, true},
                         Patch{ResourceKind::Mineral, 350, 350, 100, 100, true}}};
  CHECK_FALSE(resource_at(l, 5, 5).has_value());
  CHECK(resource_at(l, 10, 20) == ResourceKind::Food);
  CHECK(resource_at(l, 350, 350) == ResourceKind::Mineral);
  // far edges are open
  CHECK_FALSE(resource_at(l, 310, 100).has_value());
  CHECK_FALSE(resource_at(l, 450, 400).has_value());
}

TEST_CASE("food covers 36% of the default world") {
  SimConfig c;
  c.n_mineral_patches = 0;
  Rng rng(5);
  const auto l = generate_landscape(c, rng);
  int food = 0;
  constexpr int kSamples = 10000;
  for (int i = 0; i < kSamples; ++i) {
    if (resource_at(l, rng.uniform(0, 500), rng.uniform(0, 500)) == ResourceKind::Food) ++food;
  }
  CHECK(std::abs(food / double(kSamples) - 0.36) < 0.02);
}

TEST_CASE("default food area is nine times the mineral area") {
  SimConfig c;
  Rng rng(2);
  const auto p = generate_patches(c, rng);
  CHECK(p[0].side_x * p[0].side_y / (p[1].side_x * p[1].side_y) == 9.0);
}

TEST_CASE("toroidal distance examples") {
  const auto l = square(500);
  CHECK(toroidal_distance(l, {12, 34}, {12, 34}) == 0.0);
  CHECK(toroidal_distance(l, {0, 0}, {499, 0}) == doctest::Approx(1.0));
  CHECK(toroidal_distance(l, {0, 0}, {250, 250}) == doctest::Approx(353.5533905932738));
  CHECK(toroidal_distance(l, {3, 490}, {497, 5}) == doctest::Approx(std::hypot(6.0, 15.0)));
}

TEST_CASE("toroidal distance is symmetric, zero only on identity, and bounded") {
  Landscape l{500, 300, {}};
  const double bound = std::hypot(250.0, 150.0);
  Rng rng(11);
  for (int i = 0; i < 20000; ++i) {
    const Point a{rng.uniform(0, 500), rng.uniform(0, 300)};
    const Point b{rng.uniform(0, 500), rng.uniform(0, 300)};
    const double d = toroidal_distance(l, a, b);
    CHECK(d == toroidal_distance(l, b, a));
    CHECK(d <= bound + 1e-9);
    CHECK(d > 0.0);
  }
}

}  // TEST_SUITE
