#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "swarmnaming/arena.hpp"

using namespace swarmnaming;

TEST_SUITE("arena") {

TEST_CASE("default layout") {
  const Arena a = Arena::default_layout();
  CHECK(a.nest_center() == Vec2{0.0, 0.0});
  CHECK(a.resource_center(Resource::A) == Vec2{-2.5, 0.0});
  CHECK(a.resource_center(Resource::B) == Vec2{2.5, 0.0});
  CHECK(a.area_radius() == 0.3);
}

TEST_CASE("classify examples") {
  const Arena a = Arena::default_layout();
  CHECK(a.classify(a.nest_center()) == AreaKind::Nest);
  CHECK(a.classify(a.nest_center() + Vec2{-2.5, 0.0}) == AreaKind::ResourceA);
  CHECK(a.classify(a.nest_center() + Vec2{2.5, 0.0}) == AreaKind::ResourceB);
  CHECK(a.classify(a.nest_center() + Vec2{1.25, 0.0}) == AreaKind::Open);
}

TEST_CASE("boundary counts as inside") {
  const Arena a = Arena::default_layout();
  CHECK(a.classify({0.3, 0.0}) == AreaKind::Nest);
  CHECK(a.classify({0.0, -0.3}) == AreaKind::Nest);
  CHECK(a.classify({std::nextafter(0.3, 1.0), 0.0}) == AreaKind::Open);
  CHECK(a.classify({-2.2, 0.0}) == AreaKind::ResourceA);
}

TEST_CASE("classify is pure and consistent with distances") {
  const Arena a = Arena::default_layout();
  Rng rng(7);
  for (int i = 0; i < 20000; ++i) {
    const Vec2 p{rng.uniform() * 7.0 - 3.5, rng.uniform() * 2.0 - 1.0};
    const AreaKind k = a.classify(p);
    CHECK(k == a.classify(p));
    const bool in_nest = distance(p, a.nest_center()) <= 0.3;
    const bool in_a = distance(p, a.resource_center(Resource::A)) <= 0.3;
    const bool in_b = distance(p, a.resource_center(Resource::B)) <= 0.3;
    REQUIRE(int(in_nest) + int(in_a) + int(in_b) <= 1);
    const AreaKind expect = in_nest ? AreaKind::Nest
                            : in_a  ? AreaKind::ResourceA
                            : in_b  ? AreaKind::ResourceB
                                    : AreaKind::Open;
    CHECK(k == expect);
  }
}

TEST_CASE("closest resource") {
  const Arena a = Arena::default_layout();
  Rng rng(1);
  CHECK(a.closest_resource({-2.4, 0.1}, rng) == Resource::A);
  CHECK(a.closest_resource({0.01, 0.0}, rng) == Resource::B);
  CHECK(a.closest_resource({-0.01, 0.2}, rng) == Resource::A);
}

TEST_CASE("equidistant points split by a fair coin") {
  const Arena a = Arena::default_layout();
  Rng rng(2024);
  int hits_a = 0;
  const int trials = 10000;
  for (int i = 0; i < trials; ++i) {
    if (a.closest_resource({0.0, 0.1}, rng) == Resource::A) ++hits_a;
  }
  CHECK(std::abs(hits_a / double(trials) - 0.5) <= 0.02);
}

TEST_CASE("strict comparisons draw nothing") {
  const Arena a = Arena::default_layout();
  Rng used(5), fresh(5);
  (void)a.closest_resource({1.0, 0.0}, used);
  CHECK(used.uniform() == fresh.uniform());
}

TEST_CASE("invalid layouts are rejected") {
  CHECK_THROWS_AS(Arena(0.3, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(Arena(0.0, 2.5), std::invalid_argument);
  CHECK_THROWS_AS(Arena({0, 0}, {-2.5, 0}, {2.0, 0}, 0.3), std::invalid_argument);
  CHECK_NOTHROW(Arena({0, 0}, {0, 2.5}, {2.5, 0}, 0.3));
}

}
