#include "swarmnaming/arena.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace swarmnaming {

std::string_view to_string(Resource r) { return r == Resource::A ? "A" : "B"; }

std::string_view to_string(AreaKind k) {
  switch (k) {
    case AreaKind::Nest: return "nest";
    case AreaKind::ResourceA: return "resource_a";
    case AreaKind::ResourceB: return "resource_b";
    case AreaKind::Open: return "open";
  }
  return "open";
}

Arena::Arena(double area_radius, double nest_distance)
    : Arena({0.0, 0.0}, {-nest_distance, 0.0}, {nest_distance, 0.0}, area_radius) {}

Arena::Arena(Vec2 nest_center, Vec2 resource_a_center, Vec2 resource_b_center, double area_radius)
    : nest_(nest_center),
      resource_a_(resource_a_center),
      resource_b_(resource_b_center),
      radius_(area_radius),
      nest_distance_(distance(nest_center, resource_a_center)) {
  if (!nest_.is_finite() || !resource_a_.is_finite() || !resource_b_.is_finite() || !std::isfinite(radius_)) {
    throw std::invalid_argument("arena: non-finite geometry");
  }
  if (radius_ <= 0.0) throw std::invalid_argument("arena: area_radius must be positive");
  const double db = distance(nest_, resource_b_);
  if (std::abs(db - nest_distance_) > 1e-9 * std::max(1.0, nest_distance_)) {
    throw std::invalid_argument("arena: resources must be equidistant from the nest");
  }
  if (nest_distance_ <= 2.0 * radius_ || distance(resource_a_, resource_b_) <= 2.0 * radius_) {
    throw std::invalid_argument("arena: areas overlap (need nest_distance > 2 * area_radius)");
  }
}

AreaKind Arena::classify(Vec2 p) const {
  const double r2 = radius_ * radius_;
  if (squared_distance(p, nest_) <= r2) return AreaKind::Nest;
  if (squared_distance(p, resource_a_) <= r2) return AreaKind::ResourceA;
  if (squared_distance(p, resource_b_) <= r2) return AreaKind::ResourceB;
  return AreaKind::Open;
}

Resource Arena::closest_resource(Vec2 p, Rng& rng) const {
  const double da = squared_distance(p, resource_a_);
  const double db = squared_distance(p, resource_b_);
  if (da < db) return Resource::A;
  if (db < da) return Resource::B;
  return rng.coin() ? Resource::A : Resource::B;
}

}  // namespace swarmnaming
