#pragma once
// Greedy disk packing with the doubling fallback, scaled embeddings of
// configurations into medium-sized host disks, and the matching family.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "confspace/errors.hpp"
#include "confspace/geometry.hpp"

namespace confspace {

struct PackedLayout {
  std::vector<double> radii;
  std::vector<Vec2> centers;
  double R = 0.0;

  double sum_sq() const {
    double s = 0;
    for (double r : radii) s += r * r;
    return s;
  }
};

namespace detail {

// Intersection points of two circles (0, 1 or 2).
inline std::vector<Vec2> circle_intersections(Vec2 c0, double r0, Vec2 c1, double r1) {
  const Vec2 d = c1 - c0;
  const double L = norm(d);
  if (L == 0 || L > r0 + r1 || L < std::abs(r0 - r1)) return {};
  const double a = (r0 * r0 - r1 * r1 + L * L) / (2 * L);
  const double h = std::sqrt(std::max(0.0, r0 * r0 - a * a));
  const Vec2 base = c0 + (a / L) * d;
  const Vec2 off = (h / L) * perp(d);
  if (h == 0) return {base};
  return {base + off, base - off};
}

inline bool fits(const PackedLayout& lay, Vec2 c, double r, double R) {
  // Tolerances are relative: tangency points carry rounding error, but tiny
  // disks must not overlap by more than a rounding-sized fraction of themselves.
  constexpr double eps = 1e-12;
  if (norm(c) + r > R * (1 + eps)) return false;
  for (std::size_t i = 0; i < lay.centers.size(); ++i) {
    if (distance(c, lay.centers[i]) < (lay.radii[i] + r) * (1 - eps)) return false;
  }
  return true;
}

inline std::optional<Vec2> find_free_spot(const PackedLayout& lay, double r, double R, double grid_step) {
  std::vector<Vec2> cand;
  const double wall = R - r;
  if (wall < 0) return std::nullopt;
  cand.push_back({0, 0});
  for (int k = 0; k < 64; ++k) cand.push_back(wall * unit_from_turns(k / 64.0));
  const std::size_t m = lay.centers.size();
  for (std::size_t i = 0; i < m; ++i) {
    const double ri = lay.radii[i] + r;
    for (const Vec2& p : circle_intersections(lay.centers[i], ri, {0, 0}, wall)) cand.push_back(p);
    for (std::size_t j = i + 1; j < m; ++j) {
      for (const Vec2& p : circle_intersections(lay.centers[i], ri, lay.centers[j], lay.radii[j] + r)) {
        cand.push_back(p);
      }
    }
  }
  std::optional<Vec2> best;
  auto consider = [&](Vec2 p) {
    if (fits(lay, p, r, R) && (!best || norm(p) < norm(*best))) best = p;
  };
  for (const Vec2& p : cand) consider(p);
  if (best) return best;
  const int steps = static_cast<int>(std::ceil(wall / grid_step));
  for (int ix = -steps; ix <= steps; ++ix) {
    for (int iy = -steps; iy <= steps; ++iy) consider({ix * grid_step, iy * grid_step});
  }
  return best;
}

}  // namespace detail

/// Places disks of descending radii one by one; when no free spot exists the
/// enclosing radius doubles and the new disk goes into the freed half.
inline PackedLayout pack_disks(const std::vector<double>& radii) {
  if (radii.empty()) throw std::invalid_argument("pack_disks: need at least one radius");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0)) throw std::invalid_argument("pack_disks: radii must be positive");
    if (i && radii[i] > radii[i - 1]) throw std::invalid_argument("pack_disks: radii must be descending");
  }
  PackedLayout lay;
  lay.radii.push_back(radii[0]);
  lay.centers.push_back({0, 0});
  double R = radii[0];
  // Fallback grid resolution; capped so huge ratios stay tractable.
  const double step = radii.back() / 4.0;
  for (std::size_t k = 1; k < radii.size(); ++k) {
    const double r = radii[k];
    const double grid = std::max(step, R / 200.0);
    if (auto spot = detail::find_free_spot(lay, r, R, grid)) {
      lay.centers.push_back(*spot);
    } else {
      for (Vec2& c : lay.centers) c -= Vec2{R, 0};
      lay.centers.push_back({2 * R - r, 0});
      R *= 2;
    }
    lay.radii.push_back(r);
  }
  lay.R = 0;
  for (std::size_t i = 0; i < lay.centers.size(); ++i) lay.R = std::max(lay.R, norm(lay.centers[i]) + lay.radii[i]);
  if (lay.R * lay.R > 36.0 * lay.sum_sq() * (1 + 1e-12)) {
    throw std::logic_error("pack_disks: enclosing radius violates R^2 <= 36 sum r^2");
  }
  return lay;
}

// ---------------------------------------------------------------------------

/// Disks carrying global labels (1-based) but not yet a full configuration.
struct PartialDiskConfig {
  std::vector<int> labels;
  std::vector<Vec2> centers;
  double radius = 0.0;
};

inline PartialDiskConfig embed_scaled(const DiskConfig& inner, Vec2 host_center, double scale,
                                      const std::vector<int>& labels, double tol = kGeomTol) {
  if (!(scale > 0 && scale <= 1)) throw std::invalid_argument("embed_scaled: scale must be in (0, 1]");
  if (norm(host_center) + scale > 1 + tol) {
    throw std::invalid_argument("embed_scaled: host disk is not contained in the unit disk");
  }
  if (labels.size() != inner.size()) throw std::invalid_argument("embed_scaled: label count mismatch");
  if (std::set<int>(labels.begin(), labels.end()).size() != labels.size()) {
    throw std::invalid_argument("embed_scaled: labels must be injective");
  }
  PartialDiskConfig out{labels, {}, inner.radius * scale};
  for (const Vec2& c : inner.centers) out.centers.push_back(host_center + scale * c);
  return out;
}

/// Merges labeled pieces of equal radius into a configuration on 1..n.
inline DiskConfig assemble(int n, const std::vector<PartialDiskConfig>& parts, double tol = kGeomTol) {
  DiskConfig cfg{std::vector<Vec2>(static_cast<std::size_t>(n)), 0.0};
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  bool first = true;
  for (const auto& part : parts) {
    if (first) cfg.radius = part.radius;
    if (std::abs(part.radius - cfg.radius) > tol) throw std::invalid_argument("assemble: radii differ");
    first = false;
    for (std::size_t i = 0; i < part.labels.size(); ++i) {
      const int l = part.labels[i];
      if (l < 1 || l > n || seen[l]) throw std::invalid_argument("assemble: bad or repeated label " + std::to_string(l));
      seen[l] = true;
      cfg.centers[l - 1] = part.centers[i];
    }
  }
  for (int l = 1; l <= n; ++l) {
    if (!seen[l]) throw std::invalid_argument("assemble: label " + std::to_string(l) + " missing");
  }
  return cfg;
}

/// f_{S,r}: a half-scaled x in the left host with labels S, a half-scaled fixed
/// y in the right host with the remaining labels. Both pieces get radius r.
inline DiskConfig half_inclusion(const std::vector<Vec2>& x, const std::vector<Vec2>& y,
                                 const std::vector<int>& subset, int n, double r) {
  if (subset.size() != x.size() || x.size() + y.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("half_inclusion: sizes do not add up to n");
  }
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  std::vector<int> rest;
  for (int l = 1; l <= n; ++l) {
    if (!std::binary_search(s.begin(), s.end(), l)) rest.push_back(l);
  }
  for (const auto* pts : {&x, &y}) {
    if (pts->size() >= 1 && tau(*pts) < 2 * r - kGeomTol) {
      throw InfeasibleError("half_inclusion: inner configuration does not admit radius 2r");
    }
  }
  std::vector<PartialDiskConfig> parts;
  parts.push_back(embed_scaled(DiskConfig{x, 2 * r}, {-0.5, 0}, 0.5, s));
  if (!y.empty()) parts.push_back(embed_scaled(DiskConfig{y, 2 * r}, {0.5, 0}, 0.5, rest));
  return assemble(n, parts);
}

/// f_{S_,r}: configuration i (a point of Conf_{m_i, 1/m_i}) scaled by r*m_i
/// into host disk i with labels S_i.
inline DiskConfig partition_inclusion(const std::vector<std::vector<Vec2>>& pieces,
                                      const std::vector<std::vector<int>>& label_sets,
                                      const std::vector<Vec2>& hosts, double r) {
  if (pieces.size() != label_sets.size() || pieces.size() != hosts.size()) {
    throw std::invalid_argument("partition_inclusion: size mismatch");
  }
  std::vector<PartialDiskConfig> parts;
  int n = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const double m = static_cast<double>(pieces[i].size());
    parts.push_back(embed_scaled(DiskConfig{pieces[i], 1.0 / m}, hosts[i], r * m, label_sets[i]));
    n += static_cast<int>(pieces[i].size());
  }
  for (std::size_t i = 0; i < hosts.size(); ++i) {
    for (std::size_t j = i + 1; j < hosts.size(); ++j) {
      if (distance(hosts[i], hosts[j]) < r * (pieces[i].size() + pieces[j].size()) - kGeomTol) {
        throw InfeasibleError("partition_inclusion: host disks overlap");
      }
    }
  }
  return assemble(n, parts);
}

/// Host disk centers for j equal medium disks of radius rho in the unit disk.
inline std::vector<Vec2> medium_disk_layout(int j, double rho) {
  if (j < 1) throw std::invalid_argument("medium_disk_layout: j must be >= 1");
  if (j == 1) {
    if (rho > 1 + kGeomTol) throw InfeasibleError("medium disk larger than the unit disk");
    return {{0, 0}};
  }
  // A ring is tighter than the greedy packing for equal disks.
  const double ring = 1.0 - rho;
  if (ring > 0 && ring * std::sin(std::numbers::pi / j) >= rho - 1e-15) {
    std::vector<Vec2> out;
    for (int i = 0; i < j; ++i) out.push_back(ring * unit_from_turns(double(i) / j));
    return out;
  }
  const PackedLayout lay = pack_disks(std::vector<double>(static_cast<std::size_t>(j), rho));
  if (lay.R > 1 + kGeomTol) {
    throw InfeasibleError("medium_disk_layout: " + std::to_string(j) + " disks of radius " +
                          std::to_string(rho) + " do not fit");
  }
  return lay.centers;
}

/// j pairs of tangent disks, pair i spinning inside medium disk i with the
/// vector from disk 2i-1 to disk 2i at angle theta_i.
inline DiskConfig build_matching_family(int j, double r, const std::vector<double>& angles) {
  if (static_cast<int>(angles.size()) != j) throw std::invalid_argument("build_matching_family: need j angles");
  if (!(r > 0)) throw std::invalid_argument("build_matching_family: r must be positive");
  const auto hosts = medium_disk_layout(j, 2 * r);
  DiskConfig cfg{std::vector<Vec2>(2 * static_cast<std::size_t>(j)), r};
  for (int i = 0; i < j; ++i) {
    const Vec2 u = unit_from_turns(angles[i]);
    cfg.centers[2 * i] = hosts[i] - r * u;
    cfg.centers[2 * i + 1] = hosts[i] + r * u;
  }
  return cfg;
}

}  // namespace confspace
