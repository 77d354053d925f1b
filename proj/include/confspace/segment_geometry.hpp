#pragma once
// Closed-segment predicates used by the segment configuration space.

#include <algorithm>
#include <cmath>
#include <limits>

#include "confspace/vec2.hpp"

namespace confspace {

struct Segment {
  Vec2 p;
  Vec2 q;

  static Segment centered(Vec2 center, double angle_turns, double length) {
    const Vec2 h = 0.5 * length * unit_from_turns(angle_turns);
    return {center - h, center + h};
  }
};

namespace detail {

inline int orient(Vec2 a, Vec2 b, Vec2 c) {
  const double v = cross(b - a, c - a);
  return (v > 0) - (v < 0);
}

inline bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

}  // namespace detail

/// True iff the closed segments share a point.
inline bool segments_intersect(const Segment& s, const Segment& t) {
  using detail::orient;
  const int o1 = orient(s.p, s.q, t.p);
  const int o2 = orient(s.p, s.q, t.q);
  const int o3 = orient(t.p, t.q, s.p);
  const int o4 = orient(t.p, t.q, s.q);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && detail::on_segment(s.p, s.q, t.p)) return true;
  if (o2 == 0 && detail::on_segment(s.p, s.q, t.q)) return true;
  if (o3 == 0 && detail::on_segment(t.p, t.q, s.p)) return true;
  if (o4 == 0 && detail::on_segment(t.p, t.q, s.q)) return true;
  return false;
}

inline double point_segment_distance(Vec2 x, const Segment& s) {
  const Vec2 d = s.q - s.p;
  const double len2 = norm2(d);
  double t = len2 > 0 ? dot(x - s.p, d) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(x, s.p + t * d);
}

inline double segment_distance(const Segment& s, const Segment& t) {
  if (segments_intersect(s, t)) return 0.0;
  return std::min({point_segment_distance(s.p, t), point_segment_distance(s.q, t),
                   point_segment_distance(t.p, s), point_segment_distance(t.q, s)});
}

/// Distance when disjoint; otherwise minus the shortest push along either
/// segment normal that separates them, so crossing pairs score below zero.
inline double signed_separation(const Segment& s, const Segment& t) {
  if (!segments_intersect(s, t)) return segment_distance(s, t);
  double depth = std::numeric_limits<double>::infinity();
  for (const Segment* base : {&s, &t}) {
    const Vec2 d = base->q - base->p;
    const double len = norm(d);
    if (len == 0) continue;
    const Vec2 nrm = perp(d) / len;
    const double a0 = dot(s.p, nrm), a1 = dot(s.q, nrm);
    const double b0 = dot(t.p, nrm), b1 = dot(t.q, nrm);
    // Shortest push along this normal that separates the projections.
    const double push = std::min(std::max(a0, a1) - std::min(b0, b1), std::max(b0, b1) - std::min(a0, a1));
    depth = std::min(depth, std::max(push, 0.0));
  }
  return std::isfinite(depth) ? -depth : 0.0;
}

}  // namespace confspace
