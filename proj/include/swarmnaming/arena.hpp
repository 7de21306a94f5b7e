#pragma once

#include <cstdint>
#include <string_view>

#include "swarmnaming/geometry.hpp"
#include "swarmnaming/random.hpp"

namespace swarmnaming {

enum class Resource : std::uint8_t { A, B };

constexpr Resource other(Resource r) { return r == Resource::A ? Resource::B : Resource::A; }
std::string_view to_string(Resource r);

enum class AreaKind : std::uint8_t { Nest, ResourceA, ResourceB, Open };

std::string_view to_string(AreaKind k);

/// Circular nest and two circular resource areas of equal radius on an
/// unbounded plane. Immutable once built.
class Arena {
 public:
  /// Nest at the origin, resource A at (-nest_distance, 0), resource B at
  /// (+nest_distance, 0). Throws std::invalid_argument if the areas overlap.
  Arena(double area_radius, double nest_distance);

  /// General layout; both resources must be equidistant from the nest.
  Arena(Vec2 nest_center, Vec2 resource_a_center, Vec2 resource_b_center, double area_radius);

  static Arena default_layout() { return Arena(0.3, 2.5); }

  [[nodiscard]] Vec2 nest_center() const { return nest_; }
  [[nodiscard]] Vec2 resource_center(Resource r) const { return r == Resource::A ? resource_a_ : resource_b_; }
  [[nodiscard]] double area_radius() const { return radius_; }
  [[nodiscard]] double nest_distance() const { return nest_distance_; }

  /// Ground-sensor reading. Points on a circle count as inside it.
  [[nodiscard]] AreaKind classify(Vec2 p) const;

  /// Resource whose center is nearest to p; an exact tie is broken by a fair
  /// coin drawn from rng (no draw otherwise).
  [[nodiscard]] Resource closest_resource(Vec2 p, Rng& rng) const;

 private:
  Vec2 nest_;
  Vec2 resource_a_;
  Vec2 resource_b_;
  double radius_;
  double nest_distance_;
};

}  // namespace swarmnaming
