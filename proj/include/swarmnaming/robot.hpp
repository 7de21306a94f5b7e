#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "swarmnaming/arena.hpp"
#include "swarmnaming/geometry.hpp"

namespace swarmnaming {

using RobotId = std::uint32_t;

enum class Commitment : std::uint8_t { Uncommitted, A, B };

constexpr Commitment committed_to(Resource r) { return r == Resource::A ? Commitment::A : Commitment::B; }
constexpr bool is_committed(Commitment c) { return c != Commitment::Uncommitted; }
constexpr std::optional<Resource> resource_of(Commitment c) {
  if (c == Commitment::A) return Resource::A;
  if (c == Commitment::B) return Resource::B;
  return std::nullopt;
}
std::string_view to_string(Commitment c);

enum class MotionMode : std::uint8_t { BlindWalk, Explore, GoToNest, GoToResource };

std::string_view to_string(MotionMode m);

struct Pose {
  Vec2 position;
  double heading = 0.0;  // radians in [0, 2pi)
};

/// Opaque word token; ids are the per-run creation counter.
struct WordId {
  std::uint32_t value = 0;
  friend constexpr auto operator<=>(WordId, WordId) = default;
};

/// A robot's word inventory, kept in insertion order so that uniform draws
/// are reproducible.
class Inventory {
 public:
  [[nodiscard]] bool empty() const { return words_.empty(); }
  [[nodiscard]] std::size_t size() const { return words_.size(); }
  [[nodiscard]] bool contains(WordId w) const { return std::find(words_.begin(), words_.end(), w) != words_.end(); }
  [[nodiscard]] std::span<const WordId> words() const { return words_; }

  /// Returns false if already present.
  bool add(WordId w) {
    if (contains(w)) return false;
    words_.push_back(w);
    return true;
  }
  void clear() { words_.clear(); }

 private:
  std::vector<WordId> words_;
};

struct Robot {
  RobotId id = 0;
  Pose pose;
  MotionMode mode = MotionMode::BlindWalk;
  Vec2 waypoint;  // GoTo modes only
  Commitment commitment = Commitment::Uncommitted;
  AreaKind area = AreaKind::Nest;  // last ground-sensor reading
  Inventory inventory;
};

}  // namespace swarmnaming
