#pragma once

#include <span>

#include "swarmnaming/arena.hpp"
#include "swarmnaming/random.hpp"
#include "swarmnaming/robot.hpp"

namespace swarmnaming {

struct MotionParams {
  double dt = 0.1;              // s, one control step
  double speed = 0.1;           // m/s
  double turn_sigma = 0.3;      // rad per step, correlated random walk
  double avoid_radius = 0.1;    // m
  double avoid_gain = 3.0;      // repulsion weight at contact
  double arrival_radius = 0.05; // m, waypoint tolerance
  double waypoint_spread = 1.0; // waypoints drawn within this share of the area radius
  double p_return = 5e-4;       // per step, explorer heads home
};

/// One kinematic update. Explore and BlindWalk add a wrapped-Gaussian turn to
/// the heading; GoTo modes aim straight at the waypoint. Any neighbor
/// closer than avoid_radius then deflects the heading away from it, with a
/// sideways component for neighbors ahead so that head-on pairs slide past
/// each other. The returned pose is exactly speed * dt from the input.
Pose step_motion(const Robot& robot, std::span<const Vec2> neighbors,
                 const MotionParams& params, Rng& rng);

Vec2 uniform_in_disc(Vec2 center, double radius, Rng& rng);

/// Switches the navigation mode. GoTo modes get a fresh waypoint drawn
/// uniformly inside the destination area (scaled by waypoint_spread).
void head_to(Robot& robot, MotionMode mode, const Arena& arena, const MotionParams& params, Rng& rng);

/// Current waypoint for GoTo modes, nullopt otherwise.
std::optional<Vec2> navigation_target(const Robot& robot);

enum class ArrivalKind : std::uint8_t { None, ReachedNest, ReachedResource };

struct ArrivalEvent {
  ArrivalKind kind = ArrivalKind::None;
  Resource resource = Resource::A;  // meaningful for ReachedResource
  friend bool operator==(const ArrivalEvent&, const ArrivalEvent&) = default;
};

/// Updates the robot's ground reading and navigation mode after it moved.
/// Reports area entries (Open -> area transitions) for exploring, navigating
/// robots; blind walkers are tracked but produce no event. Committed robots
/// flip between GoToNest and GoToResource when they come within
/// arrival_radius of the waypoint; uncommitted robots homing to the nest
/// resume exploring there with a fresh uniform heading.
ArrivalEvent arrival_check(Robot& robot, const Arena& arena, const MotionParams& params, Rng& rng);

/// Explorer-only: with probability p_return the robot starts heading home.
bool maybe_return_to_nest(Robot& robot, const Arena& arena, const MotionParams& params, Rng& rng);

}  // namespace swarmnaming
