#pragma once

#include <cmath>
#include <numbers>

namespace confspace {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
  constexpr Vec2& operator*=(double s) { x *= s; y *= s; return *this; }

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
constexpr double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

/// Counter-clockwise quarter turn.
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

// Angles throughout the library are measured in turns (R/Z), so a full
// revolution is 1.0 rather than 2*pi.

inline double wrap_turns(double t) {
  double w = t - std::floor(t);
  return w >= 1.0 ? 0.0 : w;
}

/// Signed representative of t in [-1/2, 1/2).
inline double wrap_signed_turns(double t) { return wrap_turns(t + 0.5) - 0.5; }

inline Vec2 unit_from_turns(double t) {
  const double a = 2.0 * std::numbers::pi * t;
  return {std::cos(a), std::sin(a)};
}

inline double turns_of(Vec2 v) {
  return wrap_turns(std::atan2(v.y, v.x) / (2.0 * std::numbers::pi));
}

inline Vec2 rotate_turns(Vec2 v, double t) {
  const Vec2 u = unit_from_turns(t);
  return {u.x * v.x - u.y * v.y, u.y * v.x + u.x * v.y};
}

}  // namespace confspace
