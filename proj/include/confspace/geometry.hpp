#pragma once
// Disk and segment configurations in the unit disk, the tautological
// functions, and the recursive spinning families q_n, k_n, hhat_{a->b}.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "confspace/forests.hpp"
#include "confspace/segment_geometry.hpp"
#include "confspace/vec2.hpp"

namespace confspace {

constexpr double kGeomTol = 1e-9;

struct DiskConfig {
  std::vector<Vec2> centers;
  double radius = 0.0;

  std::size_t size() const { return centers.size(); }

  /// Smallest slack among containment and disjointness constraints.
  double clearance() const {
    double c = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < centers.size(); ++i) {
      c = std::min(c, 1.0 - radius - norm(centers[i]));
      for (std::size_t j = i + 1; j < centers.size(); ++j) {
        c = std::min(c, distance(centers[i], centers[j]) - 2.0 * radius);
      }
    }
    return c;
  }

  bool is_valid(double tol = kGeomTol) const { return radius >= 0 && clearance() >= -tol; }
};

struct SegConfig {
  std::vector<Vec2> centers;
  std::vector<double> angles;  // turns
  double length = 0.0;

  std::size_t size() const { return centers.size(); }

  Segment segment(std::size_t i) const { return Segment::centered(centers[i], angles[i], length); }

  double clearance() const {
    double c = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < centers.size(); ++i) {
      const Segment s = segment(i);
      c = std::min({c, 1.0 - norm(s.p), 1.0 - norm(s.q)});
      for (std::size_t j = 0; j < i; ++j) c = std::min(c, signed_separation(s, segment(j)));
    }
    return c;
  }

  bool is_valid(double tol = kGeomTol) const {
    return centers.size() == angles.size() && length >= 0 && clearance() >= -tol;
  }
};

/// Supremal radius for which disks about `centers` are disjoint and inside U.
inline double tau(const std::vector<Vec2>& centers) {
  double t = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < centers.size(); ++i) {
    t = std::min(t, 1.0 - norm(centers[i]));
    for (std::size_t j = i + 1; j < centers.size(); ++j) {
      const double d = distance(centers[i], centers[j]);
      if (d == 0.0) {
        throw std::invalid_argument("tau: centers " + std::to_string(i + 1) + " and " +
                                    std::to_string(j + 1) + " coincide");
      }
      t = std::min(t, 0.5 * d);
    }
  }
  return t;
}

/// Closed segments of the given length are pairwise disjoint and inside the
/// closed unit disk.
inline bool segments_fit(const std::vector<Vec2>& centers, const std::vector<double>& angles, double length) {
  std::vector<Segment> segs;
  segs.reserve(centers.size());
  for (std::size_t i = 0; i < centers.size(); ++i) {
    Segment s = Segment::centered(centers[i], angles[i], length);
    if (norm(s.p) > 1.0 || norm(s.q) > 1.0) return false;
    for (const Segment& t : segs) {
      if (segments_intersect(s, t)) return false;
    }
    segs.push_back(s);
  }
  return true;
}

/// Segment analogue of tau, by bisection on [0, 2].
inline double seg_tau(const std::vector<Vec2>& centers, const std::vector<double>& angles,
                      double tol = 1e-10) {
  if (centers.size() != angles.size()) throw std::invalid_argument("seg_tau: size mismatch");
  double lo = 0.0, hi = 2.0;
  if (segments_fit(centers, angles, hi)) return hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (segments_fit(centers, angles, mid) ? lo : hi) = mid;
  }
  return lo;
}

// ---------------------------------------------------------------------------
// Length recursion for k_n.

/// d_1 = 2, d_n = d_{n-1} + 1/d_{n-1}; returns d_1..d_n (index 0 unused).
inline std::vector<double> d_sequence(int n) {
  if (n < 1) throw std::invalid_argument("d_sequence: n must be >= 1");
  std::vector<double> d(static_cast<std::size_t>(n) + 1, 0.0);
  d[1] = 2.0;
  for (int k = 2; k <= n; ++k) d[k] = d[k - 1] + 1.0 / d[k - 1];
  return d;
}

inline double d_of(int n) { return d_sequence(n).back(); }
inline double ell(int n) { return 4.0 / d_of(n); }

// ---------------------------------------------------------------------------
// k_n: n segments of length ell_n spinning independently.

inline SegConfig build_kn(const std::vector<double>& angles) {
  const int n = static_cast<int>(angles.size());
  if (n < 1) throw std::invalid_argument("build_kn: need at least one angle");
  const auto d = d_sequence(n);
  // Work outward: stage k lives in a disk of radius 1 (then gets scaled).
  std::vector<Vec2> centers{Vec2{}};
  for (int k = 2; k <= n; ++k) {
    const double rho = d[k - 1] / d[k];  // ell_k / ell_{k-1}
    const Vec2 nl = perp(unit_from_turns(angles[k - 1]));
    const Vec2 medium = (1.0 - rho) * nl;
    for (Vec2& c : centers) c = medium + rho * c;
    centers.push_back((1.0 - 2.0 * rho) * nl);
  }
  return SegConfig{std::move(centers), angles, 4.0 / d[n]};
}

// ---------------------------------------------------------------------------
// q_n: n disks of radius 1/n, driven by n-1 angles.

inline DiskConfig build_qn(const std::vector<double>& angles) {
  const int n = static_cast<int>(angles.size()) + 1;
  std::vector<Vec2> centers{Vec2{}};
  for (int k = 2; k <= n; ++k) {
    const Vec2 u = unit_from_turns(angles[k - 2]);
    const double s = static_cast<double>(k - 1) / k;
    const Vec2 medium = -u / static_cast<double>(k);
    for (Vec2& c : centers) c = medium + s * c;
    centers.push_back(s * u);
  }
  return DiskConfig{std::move(centers), 1.0 / n};
}

/// Inverse of build_qn on its image (exact up to atan2 rounding).
inline std::vector<double> recover_qn_angles(std::vector<Vec2> centers) {
  std::vector<double> angles(centers.empty() ? 0 : centers.size() - 1);
  for (int k = static_cast<int>(centers.size()); k >= 2; --k) {
    const double th = turns_of(centers[k - 1]);
    angles[k - 2] = th;
    const Vec2 medium = -unit_from_turns(th) / static_cast<double>(k);
    const double s = static_cast<double>(k - 1) / k;
    centers.pop_back();
    for (Vec2& c : centers) c = (c - medium) / s;
  }
  return angles;
}

// ---------------------------------------------------------------------------
// hhat_{a->b}: four disks of radius 1/3; a,b rotate as a tangent pair while
// c,d sit still, then the whole picture is rotated.

namespace detail {
constexpr double kHhatBlend = 0.5;
constexpr double kHhatBump = 0.22;
}  // namespace detail

inline DiskConfig build_h(int a, int b, double phi) {
  if (!(1 <= a && a < b && b <= 4)) throw std::invalid_argument("build_h: need 1 <= a < b <= 4");
  const Vec2 u = unit_from_turns(phi);
  const double cs = u.x;
  const double t = std::clamp(cs / detail::kHhatBlend, -1.0, 1.0);
  const double bump = std::max(0.0, 1.0 - std::abs(cs) / detail::kHhatBlend);
  const Vec2 mid{-std::abs(cs) / 3.0 - detail::kHhatBump * bump, -u.y / 3.0 * t};

  const double c30 = std::sqrt(3.0) / 2.0;
  DiskConfig cfg{std::vector<Vec2>(4), 1.0 / 3.0};
  std::vector<int> others;
  for (int v = 1; v <= 4; ++v) {
    if (v != a && v != b) others.push_back(v);
  }
  cfg.centers[a - 1] = mid - u / 3.0;
  cfg.centers[b - 1] = mid + u / 3.0;
  cfg.centers[others[0] - 1] = (2.0 / 3.0) * Vec2{c30, 0.5};
  cfg.centers[others[1] - 1] = (2.0 / 3.0) * Vec2{c30, -0.5};
  return cfg;
}

inline DiskConfig build_hhat(int a, int b, double theta1, double theta2) {
  DiskConfig cfg = build_h(a, b, theta2 - theta1);
  for (Vec2& c : cfg.centers) c = rotate_turns(c, theta1);
  return cfg;
}

// ---------------------------------------------------------------------------

struct RadiusBounds {
  double r_min;  // ~ 1/sqrt(sum m_i^2), up to the packing constant below
  double r_max;  // min(1/max m_i, 1/sqrt(sum m_i))
  double packing_constant = 6.0;  // sqrt(36) from R^2 <= 36 sum r_i^2
};

inline RadiusBounds bound_calculators(const ComponentProfile& profile) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (profile.parts.empty()) return {inf, inf};
  double sq = 0, sum = 0;
  int mx = 0;
  for (int m : profile.parts) {
    if (m < 2) throw std::invalid_argument("bound_calculators: parts must be >= 2");
    sq += double(m) * m;
    sum += m;
    mx = std::max(mx, m);
  }
  return {1.0 / std::sqrt(sq), std::min(1.0 / mx, 1.0 / std::sqrt(sum))};
}

}  // namespace confspace
