#include "swarmnaming/motion.hpp"

#include <cmath>
#include <numbers>

namespace swarmnaming {

std::string_view to_string(Commitment c) {
  switch (c) {
    case Commitment::Uncommitted: return "U";
    case Commitment::A: return "A";
    case Commitment::B: return "B";
  }
  return "U";
}

std::string_view to_string(MotionMode m) {
  switch (m) {
    case MotionMode::BlindWalk: return "blind_walk";
    case MotionMode::Explore: return "explore";
    case MotionMode::GoToNest: return "go_to_nest";
    case MotionMode::GoToResource: return "go_to_resource";
  }
  return "explore";
}

Vec2 uniform_in_disc(Vec2 center, double radius, Rng& rng) {
  const double r = radius * std::sqrt(rng.uniform());
  const double a = 2.0 * std::numbers::pi * rng.uniform();
  return center + Vec2::from_angle(a) * r;
}

void head_to(Robot& robot, MotionMode mode, const Arena& arena, const MotionParams& params, Rng& rng) {
  robot.mode = mode;
  std::optional<Vec2> center;
  if (mode == MotionMode::GoToNest) center = arena.nest_center();
  if (mode == MotionMode::GoToResource) {
    if (auto r = resource_of(robot.commitment)) center = arena.resource_center(*r);
  }
  if (!center) return;
  const double spread = params.waypoint_spread * arena.area_radius();
  robot.waypoint = spread > 0.0 ? uniform_in_disc(*center, spread, rng) : *center;
}

std::optional<Vec2> navigation_target(const Robot& robot) {
  if (robot.mode == MotionMode::GoToNest) return robot.waypoint;
  if (robot.mode == MotionMode::GoToResource && is_committed(robot.commitment)) return robot.waypoint;
  return std::nullopt;
}

Pose step_motion(const Robot& robot, std::span<const Vec2> neighbors, const MotionParams& params, Rng& rng) {
  const Vec2 position = robot.pose.position;
  double heading = robot.pose.heading;

  if (auto target = navigation_target(robot)) {
    const Vec2 to_target = *target - position;
    if (to_target.squared_norm() > 0.0) heading = std::atan2(to_target.y, to_target.x);
  } else {
    heading += rng.normal(params.turn_sigma);
  }

  const Vec2 desired = Vec2::from_angle(heading);
  Vec2 steer = desired;
  bool deflected = false;
  const double r = params.avoid_radius;
  for (const Vec2 q : neighbors) {
    const Vec2 offset = position - q;
    const double d = offset.norm();
    if (d >= r) continue;
    // coincident points: back straight off
    const Vec2 away = d > 0.0 ? offset * (1.0 / d) : desired * -1.0;
    const double weight = params.avoid_gain * (1.0 - d / r);
    steer += away * weight;
    if (away.dot(desired) < 0.0) steer += away.perp() * weight;
    deflected = true;
  }
  if (deflected) {
    if (steer.squared_norm() < 1e-18) steer = desired.perp();
    heading = std::atan2(steer.y, steer.x);
  }

  heading = wrap_angle(heading);
  const double step = params.speed * params.dt;
  return Pose{position + Vec2::from_angle(heading) * step, heading};
}

ArrivalEvent arrival_check(Robot& robot, const Arena& arena, const MotionParams& params, Rng& rng) {
  const AreaKind area = arena.classify(robot.pose.position);
  const bool entered = area != robot.area && area != AreaKind::Open;
  robot.area = area;

  ArrivalEvent event;
  if (entered && robot.mode != MotionMode::BlindWalk) {
    switch (area) {
      case AreaKind::Nest: event.kind = ArrivalKind::ReachedNest; break;
      case AreaKind::ResourceA: event = {ArrivalKind::ReachedResource, Resource::A}; break;
      case AreaKind::ResourceB: event = {ArrivalKind::ReachedResource, Resource::B}; break;
      case AreaKind::Open: break;
    }
  }

  const double tol2 = params.arrival_radius * params.arrival_radius;
  const auto target = navigation_target(robot);
  if (!target || squared_distance(robot.pose.position, *target) > tol2) return event;
  if (robot.mode == MotionMode::GoToResource) {
    head_to(robot, MotionMode::GoToNest, arena, params, rng);
  } else if (is_committed(robot.commitment)) {
    head_to(robot, MotionMode::GoToResource, arena, params, rng);
  } else {
    robot.mode = MotionMode::Explore;
    robot.pose.heading = wrap_angle(rng.uniform() * 2.0 * std::numbers::pi);
  }
  return event;
}

bool maybe_return_to_nest(Robot& robot, const Arena& arena, const MotionParams& params, Rng& rng) {
  if (robot.mode != MotionMode::Explore || is_committed(robot.commitment)) return false;
  if (!rng.bernoulli(params.p_return)) return false;
  head_to(robot, MotionMode::GoToNest, arena, params, rng);
  return true;
}

}  // namespace swarmnaming
