#pragma once
// Segment obstructions: the right-angle fit threshold, hourglass trap
// parameters, the three-strip midpoint box, and small constructive helpers.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include "confspace/geometry.hpp"

namespace confspace {

// ---------------------------------------------------------------------------
// Two perpendicular segments. By rotation invariance segment 1 is horizontal
// and segment 2 vertical; the free parameters are the two centers.

inline double perpendicular_clearance(double r, const std::array<double, 4>& p) {
  const Segment s1 = Segment::centered({p[0], p[1]}, 0.0, r);
  const Segment s2 = Segment::centered({p[2], p[3]}, 0.25, r);
  return std::min({1.0 - norm(s1.p), 1.0 - norm(s1.q), 1.0 - norm(s2.p), 1.0 - norm(s2.q),
                   signed_separation(s1, s2)});
}

struct PerpendicularOptions {
  int random_starts = 1000;
  std::uint64_t seed = 0;
  bool paper_seeds = true;       // start from the chord + tangent-disk picture
  double feasibility_tol = 1e-9; // clearance >= -tol counts as a fit
};

namespace detail {

struct NmResult {
  std::array<double, 4> x;
  double clearance;
};

inline double neg_clearance(const gsl_vector* v, void* params) {
  const double r = *static_cast<double*>(params);
  return -perpendicular_clearance(r, {gsl_vector_get(v, 0), gsl_vector_get(v, 1), gsl_vector_get(v, 2),
                                      gsl_vector_get(v, 3)});
}

inline NmResult nelder_mead(double r, const std::array<double, 4>& start, double step, double stop_at) {
  gsl_set_error_handler_off();
  gsl_multimin_function f{&neg_clearance, 4, &r};
  gsl_vector* x = gsl_vector_alloc(4);
  gsl_vector* ss = gsl_vector_alloc(4);
  for (int i = 0; i < 4; ++i) gsl_vector_set(x, i, start[i]);
  gsl_vector_set_all(ss, step);
  gsl_multimin_fminimizer* s = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 4);
  gsl_multimin_fminimizer_set(s, &f, x, ss);
  for (int it = 0; it < 3000; ++it) {
    if (gsl_multimin_fminimizer_iterate(s)) break;
    if (-s->fval >= stop_at) break;
    if (gsl_multimin_fminimizer_size(s) < 1e-12) break;
  }
  NmResult out{{gsl_vector_get(s->x, 0), gsl_vector_get(s->x, 1), gsl_vector_get(s->x, 2), gsl_vector_get(s->x, 3)},
               -s->fval};
  gsl_multimin_fminimizer_free(s);
  gsl_vector_free(ss);
  gsl_vector_free(x);
  return out;
}

}  // namespace detail

/// Best clearance found for two perpendicular segments of length r.
inline double best_perpendicular_clearance(double r, const PerpendicularOptions& opt = {}) {
  std::vector<std::array<double, 4>> starts;
  if (opt.paper_seeds) {
    // A chord at distance 3/5 from the center and a perpendicular segment
    // from its midpoint to the boundary: both have length 8/5. Scaled to r.
    const double s = r / 1.6;
    starts.push_back({0, -0.6 * s, 0, 0.2 * s});
    starts.push_back({0, 0.6 * s, 0, -0.2 * s});
    starts.push_back({0.2 * s, 0, -0.6 * s, 0});
    starts.push_back({-0.2 * s, 0, 0.6 * s, 0});
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (int k = 0; k < opt.random_starts; ++k) starts.push_back({u(rng), u(rng), u(rng), u(rng)});

  double best = -std::numeric_limits<double>::infinity();
  for (const auto& st : starts) {
    auto res = detail::nelder_mead(r, st, 0.05, 0.0);
    if (res.clearance < 0 && res.clearance > -1e-3) res = detail::nelder_mead(r, res.x, 1e-3, 0.0);
    best = std::max(best, res.clearance);
    if (best >= 0) break;
  }
  return best;
}

inline bool perpendicular_fits(double r, const PerpendicularOptions& opt = {}) {
  return best_perpendicular_clearance(r, opt) >= -opt.feasibility_tol;
}

/// Largest r for which two perpendicular disjoint segments of length r fit
/// in the closed unit disk, by bisection on [1, 2].
inline double max_perpendicular_length(double tolerance, const PerpendicularOptions& opt = {}) {
  if (!(tolerance > 0)) throw std::invalid_argument("max_perpendicular_length: tolerance must be positive");
  double lo = 1.0, hi = 2.0;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    (perpendicular_fits(mid, opt) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Hourglass parameters for the strip |y| < 1.

struct TrapParams {
  double a = 0, b = 0, r = 0, delta = 0;
  std::vector<Vec2> S;

  double ratio() const { return a / b; }
  double hourglass_width() const { return 2 * ratio(); }
  double diagonal() const { return 2 * std::sqrt(ratio() * ratio() + 1); }
  double trap_length() const { return std::hypot(a + ratio(), b + 1); }

  bool width_ok() const { return hourglass_width() < delta / 2; }
  bool diagonal_ok() const { return diagonal() < 2 * r; }
  bool length_ok() const { return trap_length() < r; }
  bool valid() const { return a > 0 && b > 0 && b < 1 && width_ok() && diagonal_ok() && length_ok(); }

  std::string violation() const {
    if (!(a > 0 && b > 0)) return "a and b must be positive";
    if (!(b < 1)) return "obstacles must lie inside the strip (b < 1)";
    if (!width_ok()) return "hourglass width 2a/b = " + std::to_string(hourglass_width()) + " is not below delta/2";
    if (!diagonal_ok()) return "hourglass diagonal is not below 2r";
    if (!length_ok()) return "trap length is not below r";
    return {};
  }
};

/// Obstacle lattice {((2k+1)a, +-b)} restricted to |x| <= half_width.
inline std::vector<Vec2> hourglass_points(double a, double b, double half_width) {
  std::vector<Vec2> S;
  const int kmax = static_cast<int>(std::ceil(half_width / (2 * a)));
  for (int k = -kmax - 1; k <= kmax; ++k) {
    const double x = (2 * k + 1) * a;
    if (std::abs(x) > half_width) continue;
    S.push_back({x, b});
    S.push_back({x, -b});
  }
  return S;
}

/// Ratio first, then scale, each strict inequality with a 10% margin.
inline TrapParams hourglass_params(double r, double delta, double half_width = -1) {
  if (!(r > 1)) throw std::invalid_argument("hourglass_params: r must exceed half the strip height (1)");
  if (!(delta > 0)) throw std::invalid_argument("hourglass_params: delta must be positive");
  constexpr double margin = 0.9;
  TrapParams p;
  p.r = r;
  p.delta = delta;
  const double q = margin * std::min(delta / 4, std::sqrt(r * r - 1));
  // b < 1 keeps the obstacles inside the strip.
  p.b = margin * std::min(r / std::sqrt(1 + q * q) - 1, 1.0);
  p.a = q * p.b;
  if (half_width < 0) half_width = r + 2 * delta;
  p.S = hourglass_points(p.a, p.b, half_width);
  if (!p.valid()) throw std::logic_error("hourglass_params: " + p.violation());
  return p;
}

// ---------------------------------------------------------------------------

inline SegConfig radial_surjectivity_demo(const std::vector<double>& angles, double r) {
  if (!(r > 0 && r < 1)) throw std::invalid_argument("radial_surjectivity_demo: need 0 < r < 1");
  std::vector<double> w;
  for (double a : angles) w.push_back(wrap_turns(a));
  std::sort(w.begin(), w.end());
  if (std::adjacent_find(w.begin(), w.end()) != w.end()) {
    throw std::invalid_argument("radial_surjectivity_demo: angles must be distinct modulo 1");
  }
  SegConfig c{{}, angles, r};
  for (double a : angles) c.centers.push_back((1 - r / 2) * unit_from_turns(a));
  return c;
}

/// Largest radius for k disks in a row inside the unit disk.
inline double collinear_obstruction(int k) {
  if (k < 1) throw std::invalid_argument("collinear_obstruction: k must be >= 1");
  return 1.0 / k;
}

}  // namespace confspace
