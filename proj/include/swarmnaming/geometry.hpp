#pragma once

#include <cmath>
#include <numbers>

namespace swarmnaming {

/// Planar vector in meters.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2& operator-=(Vec2 o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr Vec2& operator*=(double s) {
    x *= s;
    y *= s;
    return *this;
  }

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return a += b; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return a -= b; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return a *= s; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return a *= s; }
  friend constexpr bool operator==(Vec2, Vec2) = default;

  [[nodiscard]] constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
  [[nodiscard]] constexpr double squared_norm() const { return dot(*this); }
  [[nodiscard]] double norm() const { return std::hypot(x, y); }
  [[nodiscard]] bool is_finite() const { return std::isfinite(x) && std::isfinite(y); }

  /// Counter-clockwise quarter turn.
  [[nodiscard]] constexpr Vec2 perp() const { return {-y, x}; }

  static Vec2 from_angle(double radians) { return {std::cos(radians), std::sin(radians)}; }
};

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }
constexpr double squared_distance(Vec2 a, Vec2 b) { return (a - b).squared_norm(); }

/// Maps any finite angle into [0, 2pi).
inline double wrap_angle(double radians) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double wrapped = std::fmod(radians, two_pi);
  if (wrapped < 0.0) wrapped += two_pi;
  // fmod can round a tiny negative up to exactly 2pi
  if (wrapped >= two_pi) wrapped = 0.0;
  return wrapped;
}

}  // namespace swarmnaming
