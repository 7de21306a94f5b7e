#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "swarmnaming/motion.hpp"

using namespace swarmnaming;

namespace {

Robot committed_robot(Commitment c, MotionMode mode, Vec2 at, const Arena& arena, const MotionParams& p, Rng& rng) {
  Robot r;
  r.commitment = c;
  r.pose.position = at;
  r.area = arena.classify(at);
  head_to(r, mode, arena, p, rng);
  return r;
}

}  // namespace

TEST_SUITE("motion") {

TEST_CASE("navigation moves speed*dt toward the resource center") {
  const Arena arena = Arena::default_layout();
  MotionParams p;
  p.waypoint_spread = 0.0;
  Rng rng(1);
  Robot r = committed_robot(Commitment::A, MotionMode::GoToResource, arena.nest_center(), arena, p, rng);
  const Pose next = step_motion(r, {}, p, rng);
  CHECK(next.position.x == doctest::Approx(-0.01).epsilon(1e-12));
  CHECK(next.position.y == doctest::Approx(0.0));
  CHECK(distance(next.position, r.pose.position) == doctest::Approx(0.01));
}

TEST_CASE("waypoints lie inside the destination area") {
  const Arena arena = Arena::default_layout();
  MotionParams p;
  Rng rng(3);
  for (int i = 0; i < 2000; ++i) {
    Robot r = committed_robot(Commitment::B, i % 2 ? MotionMode::GoToNest : MotionMode::GoToResource,
                              arena.nest_center(), arena, p, rng);
    const AreaKind want = i % 2 ? AreaKind::Nest : AreaKind::ResourceB;
    CHECK(arena.classify(*navigation_target(r)) == want);
  }
}

TEST_CASE("zero turn noise keeps an explorer on a straight line") {
  const Arena arena = Arena::default_layout();
  MotionParams p;
  p.turn_sigma = 0.0;
  Rng rng(1);
  Robot r;
  r.mode = MotionMode::Explore;
  r.pose = {{0.0, 0.0}, 0.5};
  for (int i = 0; i < 100; ++i) r.pose = step_motion(r, {}, p, rng);
  CHECK(r.pose.heading == doctest::Approx(0.5));
  CHECK(r.pose.position.x == doctest::Approx(std::cos(0.5)));
  CHECK(r.pose.position.y == doctest::Approx(std::sin(0.5)));
}

TEST_CASE("head-on pair is deflected and does not close in") {
  const Arena arena({0, 0}, {-2.5, 0}, {2.5, 0}, 0.3);
  MotionParams p;
  p.waypoint_spread = 0.0;
  Rng rng(1);
  Robot left = committed_robot(Commitment::B, MotionMode::GoToResource, {1.0, 0.0}, arena, p, rng);
  Robot right = committed_robot(Commitment::A, MotionMode::GoToResource, {1.05, 0.0}, arena, p, rng);
  left.pose.heading = 0.0;
  right.pose.heading = std::numbers::pi;
  double d = distance(left.pose.position, right.pose.position);
  for (int step = 0; step < 10; ++step) {
    std::vector<Vec2> near_left, near_right;
    if (d < p.avoid_radius) {
      near_left.push_back(right.pose.position);
      near_right.push_back(left.pose.position);
    }
    const Pose nl = step_motion(left, near_left, p, rng);
    const Pose nr = step_motion(right, near_right, p, rng);
    if (step == 0) {
      CHECK(std::abs(nl.heading) > 1e-3);
      CHECK(std::abs(nr.heading - std::numbers::pi) > 1e-3);
    }
    left.pose = nl;
    right.pose = nr;
    const double next = distance(left.pose.position, right.pose.position);
    CHECK(next >= d - 1e-12);
    d = next;
  }
}

TEST_CASE("displacement is exactly speed*dt and headings stay normalised") {
  const Arena arena = Arena::default_layout();
  MotionParams p;
  Rng rng(11);
  for (int i = 0; i < 5000; ++i) {
    Robot r;
    r.mode = i % 3 == 0 ? MotionMode::Explore : MotionMode::BlindWalk;
    r.pose = {{rng.uniform(), rng.uniform()}, wrap_angle(rng.uniform() * 10.0)};
    std::vector<Vec2> near;
    const int k = static_cast<int>(rng.index(4));
    for (int j = 0; j < k; ++j) near.push_back(r.pose.position + Vec2{rng.uniform() * 0.1 - 0.05, rng.uniform() * 0.1 - 0.05});
    if (i % 7 == 0) near.push_back(r.pose.position);
    const Pose next = step_motion(r, near, p, rng);
    CHECK(distance(next.position, r.pose.position) <= p.speed * p.dt + 1e-12);
    CHECK(next.heading >= 0.0);
    CHECK(next.heading < 2.0 * std::numbers::pi);
    CHECK(next.position.is_finite());
  }
}

TEST_CASE("arrival events") {
  const Arena arena = Arena::default_layout();
  MotionParams p;
  p.waypoint_spread = 0.0;
  Rng rng(1);

  SUBCASE("committed robot reaching its resource turns home") {
    Robot r = committed_robot(Commitment::A, MotionMode::GoToResource, {-1.0, 0.0}, arena, p, rng);
    r.pose.position = {-2.5, 0.0};
    const ArrivalEvent ev = arrival_check(r, arena, p, rng);
    CHECK(ev == ArrivalEvent{ArrivalKind::ReachedResource, Resource::A});
    CHECK(r.mode == MotionMode::GoToNest);
  }
  SUBCASE("entering the area edge reports the entry before the waypoint is reached") {
    Robot r = committed_robot(Commitment::A, MotionMode::GoToResource, {-1.0, 0.0}, arena, p, rng);
    r.pose.position = {-2.21, 0.0};
    CHECK(arrival_check(r, arena, p, rng).kind == ArrivalKind::ReachedResource);
    CHECK(r.mode == MotionMode::GoToResource);
    CHECK(arrival_check(r, arena, p, rng).kind == ArrivalKind::None);
  }
  SUBCASE("explorer stumbling on B") {
    Robot r;
    r.mode = MotionMode::Explore;
    r.area = AreaKind::Open;
    r.pose.position = {2.4, 0.1};
    CHECK(arrival_check(r, arena, p, rng) == ArrivalEvent{ArrivalKind::ReachedResource, Resource::B});
    CHECK(r.mode == MotionMode::Explore);
  }
  SUBCASE("open ground") {
    Robot r;
    r.mode = MotionMode::Explore;
    r.area = AreaKind::Open;
    r.pose.position = {1.0, 1.0};
    CHECK(arrival_check(r, arena, p, rng).kind == ArrivalKind::None);
  }
  SUBCASE("blind walkers are silent") {
    Robot r;
    r.mode = MotionMode::BlindWalk;
    r.area = AreaKind::Open;
    r.pose.position = {2.5, 0.0};
    CHECK(arrival_check(r, arena, p, rng).kind == ArrivalKind::None);
    CHECK(r.area == AreaKind::ResourceB);
  }
  SUBCASE("homing explorer resumes exploring at the nest") {
    Robot r;
    r.mode = MotionMode::Explore;
    r.area = AreaKind::Open;
    head_to(r, MotionMode::GoToNest, arena, p, rng);
    r.pose.position = {0.01, 0.0};
    CHECK(arrival_check(r, arena, p, rng).kind == ArrivalKind::ReachedNest);
    CHECK(r.mode == MotionMode::Explore);
  }
}

TEST_CASE("return to nest") {
  const Arena arena = Arena::default_layout();
  MotionParams p;
  Rng rng(99);
  Robot r;
  r.mode = MotionMode::Explore;

  p.p_return = 0.0;
  for (int i = 0; i < 1000; ++i) CHECK_FALSE(maybe_return_to_nest(r, arena, p, rng));

  p.p_return = 1.0;
  CHECK(maybe_return_to_nest(r, arena, p, rng));
  CHECK(r.mode == MotionMode::GoToNest);

  p.p_return = 0.001;
  int fired = 0;
  const int trials = 100000;
  for (int i = 0; i < trials; ++i) {
    r.mode = MotionMode::Explore;
    if (maybe_return_to_nest(r, arena, p, rng)) ++fired;
  }
  CHECK(std::abs(fired / double(trials) - 0.001) <= 3e-4);

  Robot committed;
  committed.commitment = Commitment::A;
  committed.mode = MotionMode::Explore;
  p.p_return = 1.0;
  CHECK_FALSE(maybe_return_to_nest(committed, arena, p, rng));
}

TEST_CASE("lone committed robot cycles with period 2d/v") {
  const Arena arena = Arena::default_layout();
  MotionParams p;
  p.waypoint_spread = 0.0;
  Rng rng(1);
  Robot r = committed_robot(Commitment::B, MotionMode::GoToResource, arena.nest_center(), arena, p, rng);
  std::vector<double> nest_turns;
  MotionMode prev = r.mode;
  for (int step = 1; step <= 3000; ++step) {
    r.pose = step_motion(r, {}, p, rng);
    (void)arrival_check(r, arena, p, rng);
    if (prev == MotionMode::GoToNest && r.mode == MotionMode::GoToResource) nest_turns.push_back(step * p.dt);
    prev = r.mode;
  }
  REQUIRE(nest_turns.size() >= 4);
  // each leg stops arrival_radius short of both turning points
  const double expected = 2.0 * (arena.nest_distance() - 2.0 * p.arrival_radius) / p.speed;
  for (std::size_t i = 1; i < nest_turns.size(); ++i) {
    const double period = nest_turns[i] - nest_turns[i - 1];
    CHECK(std::abs(period - expected) <= 3 * p.dt);
    CHECK(period == doctest::Approx(2.0 * arena.nest_distance() / p.speed).epsilon(0.05));
  }
}

}
