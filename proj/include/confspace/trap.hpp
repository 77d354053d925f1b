#pragma once
// Breadth-first search over a pose grid (x, y, theta) for a rigid segment in
// a horizontal strip with point obstacles. Every grid move is checked against
// the exact region swept by the segment, so each reached pose is reachable
// by a genuine collision-free motion.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "confspace/errors.hpp"
#include "confspace/segments.hpp"

namespace confspace {

struct PoseGrid {
  double hx = 0.005;
  double hy = 0.005;
  double htheta_deg = 1.0;  // must divide 180
  std::size_t max_states = 20'000'000;
};

struct TrapProblem {
  double length = 0;
  double y_lo = -1, y_hi = 1;  // open strip
  std::vector<Vec2> obstacles;
  Vec2 start{0, 0};
  double start_angle_deg = 90;
  double band = 0;         // pass iff every segment point keeps |x - start.x| < band
  double window = 0;       // centers may range over |x - start.x| <= window
};

struct TrapCertificate {
  bool certified = false;
  bool reached_horizontal = false;
  bool hit_window = false;
  bool budget_exceeded = false;
  std::size_t states = 0;
  double x_min = std::numeric_limits<double>::infinity();   // over segment points
  double x_max = -std::numeric_limits<double>::infinity();
  double theta_min_deg = 0;  // offsets from the start angle
  double theta_max_deg = 0;
  std::string reason;
};

namespace detail {

inline double deg2rad(double d) { return d * std::numbers::pi / 180.0; }

inline Segment pose_segment(double x, double y, double th_deg, double len) {
  const double t = deg2rad(th_deg);
  const Vec2 h{0.5 * len * std::cos(t), 0.5 * len * std::sin(t)};
  return {Vec2{x, y} - h, Vec2{x, y} + h};
}

// Smallest distance to the strip walls and obstacles; <= 0 means invalid.
inline double pose_clearance(const TrapProblem& pb, const Segment& s) {
  double c = std::min({pb.y_hi - s.p.y, pb.y_hi - s.q.y, s.p.y - pb.y_lo, s.q.y - pb.y_lo});
  for (const Vec2& o : pb.obstacles) c = std::min(c, point_segment_distance(o, s));
  return c;
}

// Closed parallelogram swept by s translated by d.
inline bool translation_hits(const Segment& s, Vec2 d, Vec2 o) {
  const Vec2 e = s.q - s.p;
  const double det = cross(e, d);
  if (std::abs(det) < 1e-300) {
    return point_segment_distance(o, {s.p, s.q + d}) == 0 || point_segment_distance(o, {s.p + d, s.q}) == 0;
  }
  const Vec2 w = o - s.p;
  const double u = cross(w, d) / det;
  const double v = cross(e, w) / det;
  return u >= 0 && u <= 1 && v >= 0 && v <= 1;
}

// Region swept by a segment of half-length h about c as its angle goes from
// th0 to th0 + dth (degrees, dth > 0): a double sector.
inline bool rotation_hits(Vec2 c, double h, double th0, double dth, Vec2 o) {
  const Vec2 w = o - c;
  if (norm(w) > h) return false;
  if (norm(w) == 0) return true;
  double ang = std::atan2(w.y, w.x) * 180.0 / std::numbers::pi - th0;
  ang = std::fmod(ang, 180.0);
  if (ang < 0) ang += 180.0;
  return ang <= dth;
}

inline double max_abs_cos(double th0, double dth) {
  double m = std::max(std::abs(std::cos(deg2rad(th0))), std::abs(std::cos(deg2rad(th0 + dth))));
  double k = std::ceil(th0 / 180.0);
  if (180.0 * k <= th0 + dth) m = 1.0;
  return m;
}

inline double max_abs_sin(double th0, double dth) {
  double m = std::max(std::abs(std::sin(deg2rad(th0))), std::abs(std::sin(deg2rad(th0 + dth))));
  // Does [th0, th0 + dth] contain 90 mod 180?
  double k = std::ceil((th0 - 90.0) / 180.0);
  if (90.0 + 180.0 * k <= th0 + dth) m = 1.0;
  return m;
}

}  // namespace detail

/// Clearance of the start pose (distance to walls and obstacles).
inline double start_clearance(const TrapProblem& pb) {
  return detail::pose_clearance(pb, detail::pose_segment(pb.start.x, pb.start.y, pb.start_angle_deg, pb.length));
}

inline TrapCertificate certify_trap(const TrapProblem& pb, const PoseGrid& grid) {
  using namespace detail;
  const int K = static_cast<int>(std::lround(360.0 / grid.htheta_deg));
  const int half_turn = K / 2;
  if (std::abs(K * grid.htheta_deg - 360.0) > 1e-9 || K % 2) {
    throw std::invalid_argument("certify_trap: angular step must divide 180 degrees");
  }
  const double clear = start_clearance(pb);
  if (clear <= 0) throw std::invalid_argument("certify_trap: start pose is not collision-free");
  const double step = std::max({grid.hx, grid.hy, 0.5 * pb.length * deg2rad(grid.htheta_deg)});
  if (step >= clear) {
    throw ResolutionError("grid step " + std::to_string(step) + " is not below the start clearance " +
                          std::to_string(clear));
  }
  const int I = static_cast<int>(std::floor(pb.window / grid.hx));
  const double h = 0.5 * pb.length;

  const int J = static_cast<int>(std::ceil((pb.y_hi - pb.y_lo) / grid.hy)) + 1;
  auto key = [&](int i, int j, int k) -> std::uint64_t {
    return (static_cast<std::uint64_t>(i + I) * static_cast<std::uint64_t>(2 * J + 1) +
            static_cast<std::uint64_t>(j + J)) * static_cast<std::uint64_t>(K) + static_cast<std::uint64_t>(k);
  };
  auto pose = [&](int i, int j, int k) {
    return pose_segment(pb.start.x + i * grid.hx, pb.start.y + j * grid.hy, pb.start_angle_deg + k * grid.htheta_deg,
                        pb.length);
  };
  // Obstacles sorted by x so each move only inspects a narrow column.
  std::vector<Vec2> obs = pb.obstacles;
  std::sort(obs.begin(), obs.end(), [](Vec2 a, Vec2 b) { return a.x < b.x; });
  auto any_in_column = [&](double xlo, double xhi, auto&& hit) {
    auto it = std::lower_bound(obs.begin(), obs.end(), xlo, [](Vec2 o, double v) { return o.x < v; });
    for (; it != obs.end() && it->x <= xhi; ++it) {
      if (hit(*it)) return true;
    }
    return false;
  };

  auto valid = [&](const Segment& s) {
    if (std::min({pb.y_hi - s.p.y, pb.y_hi - s.q.y, s.p.y - pb.y_lo, s.q.y - pb.y_lo}) <= 0) return false;
    return !any_in_column(std::min(s.p.x, s.q.x), std::max(s.p.x, s.q.x),
                          [&](Vec2 o) { return point_segment_distance(o, s) == 0; });
  };
  const int start_units = static_cast<int>(std::lround(pb.start_angle_deg / grid.htheta_deg));

  TrapCertificate cert;
  struct State { int i, j, k, turn; };  // turn = signed angle offset in steps
  std::unordered_set<std::uint64_t> seen;
  std::deque<State> queue;
  queue.push_back({0, 0, 0, 0});
  seen.insert(key(0, 0, 0));

  auto record = [&](const State& st) {
    const Segment s = pose(st.i, st.j, st.k);
    cert.x_min = std::min({cert.x_min, s.p.x, s.q.x});
    cert.x_max = std::max({cert.x_max, s.p.x, s.q.x});
    cert.theta_min_deg = std::min(cert.theta_min_deg, st.turn * grid.htheta_deg);
    cert.theta_max_deg = std::max(cert.theta_max_deg, st.turn * grid.htheta_deg);
    if ((((start_units + st.k) % half_turn) + half_turn) % half_turn == 0) cert.reached_horizontal = true;
  };

  while (!queue.empty()) {
    const State st = queue.front();
    queue.pop_front();
    record(st);
    if (cert.reached_horizontal) break;
    const Segment s = pose(st.i, st.j, st.k);
    const Vec2 c{pb.start.x + st.i * grid.hx, pb.start.y + st.j * grid.hy};
    const double th = pb.start_angle_deg + st.k * grid.htheta_deg;

    auto try_push = [&](State nx, auto&& swept_clear) {
      if (std::abs(nx.i) > I) {
        // The segment could leave the search window.
        if (valid(pose(nx.i, nx.j, nx.k)) && swept_clear()) cert.hit_window = true;
        return;
      }
      nx.k = ((nx.k % K) + K) % K;
      const auto kk = key(nx.i, nx.j, nx.k);
      if (seen.count(kk)) return;
      if (!valid(pose(nx.i, nx.j, nx.k)) || !swept_clear()) return;
      seen.insert(kk);
      queue.push_back(nx);
    };

    for (int dir : {-1, 1}) {
      const Vec2 dx{dir * grid.hx, 0};
      try_push(State{st.i + dir, st.j, st.k, st.turn}, [&] {
        const double lo = std::min(s.p.x, s.q.x) - grid.hx, hi = std::max(s.p.x, s.q.x) + grid.hx;
        return !any_in_column(lo, hi, [&](Vec2 o) { return translation_hits(s, dx, o); });
      });
      const Vec2 dy{0, dir * grid.hy};
      try_push(State{st.i, st.j + dir, st.k, st.turn}, [&] {
        const double lo = std::min(s.p.x, s.q.x), hi = std::max(s.p.x, s.q.x);
        return !any_in_column(lo, hi, [&](Vec2 o) { return translation_hits(s, dy, o); });
      });
      const double th0 = dir > 0 ? th : th - grid.htheta_deg;
      try_push(State{st.i, st.j, st.k + dir, st.turn + dir}, [&] {
        const double ext = h * max_abs_sin(th0, grid.htheta_deg);
        if (c.y + ext >= pb.y_hi || c.y - ext <= pb.y_lo) return false;
        const double wx = h * max_abs_cos(th0, grid.htheta_deg);
        return !any_in_column(c.x - wx, c.x + wx,
                              [&](Vec2 o) { return rotation_hits(c, h, th0, grid.htheta_deg, o); });
      });
    }
    if (cert.hit_window) break;
    if (seen.size() > grid.max_states) {
      cert.budget_exceeded = true;
      break;
    }
  }
  cert.states = seen.size();
  const bool in_band = cert.x_max - pb.start.x < pb.band && pb.start.x - cert.x_min < pb.band;
  cert.certified = !cert.reached_horizontal && !cert.hit_window && !cert.budget_exceeded && in_band;
  if (cert.reached_horizontal) cert.reason = "a horizontal pose is reachable";
  else if (cert.hit_window) cert.reason = "the segment reaches the edge of the search window";
  else if (cert.budget_exceeded) cert.reason = "state budget exceeded before the search closed";
  else if (!in_band) cert.reason = "reachable segment points leave the allowed vertical band";
  else cert.reason = "trapped";
  return cert;
}

/// Hourglass trap in the strip |y| < 1 starting from the vertical segment on
/// the y-axis. The parameter invariants are re-checked against params.delta.
inline TrapCertificate trap_certify(const TrapParams& params, const PoseGrid& grid = {}) {
  if (!params.valid()) {
    TrapCertificate cert;
    cert.reason = "parameters violate the hourglass inequalities: " + params.violation();
    return cert;
  }
  TrapProblem pb;
  pb.length = params.r;
  pb.obstacles = params.S;
  pb.band = params.delta / 2;
  pb.window = params.r / 2 + 2 * params.delta;
  return certify_trap(pb, grid);
}

// ---------------------------------------------------------------------------
// Three strips whose hourglass traps confine vertical segments near the
// middle box [-eps, eps]^2.

/// Picks a grid fine enough for the start clearance (steps at a third of it).
inline PoseGrid auto_grid(const TrapProblem& pb, std::size_t max_states) {
  const double c = start_clearance(pb);
  PoseGrid g;
  g.hx = g.hy = c / 3;
  const double max_deg = (c / 3) / (0.5 * pb.length) * 180.0 / std::numbers::pi;
  g.htheta_deg = 180.0 / std::ceil(180.0 / max_deg);
  g.max_states = max_states;
  return g;
}

struct StripTrap {
  std::string name;
  double y_lo = 0, y_hi = 0;  // strip in disk coordinates
  double r = 0;               // segment length in disk coordinates
  double delta = 0;
  TrapParams normalized;      // params for the strip rescaled to |y| < 1
  std::vector<Vec2> S;        // obstacles in disk coordinates, inside D^2
  double start_x = 0;         // representative start, disk coordinates
  bool attempted = false;
  TrapCertificate certificate;
};

struct MidpointBox {
  double eps = 0, eps1 = 0, eps2 = 0;
  double r = 0;
  std::vector<Vec2> S;
  std::vector<StripTrap> strips;
  bool all_certified() const {
    return std::all_of(strips.begin(), strips.end(), [](const StripTrap& s) { return s.certificate.certified; });
  }
};

namespace detail {

inline StripTrap make_strip(const std::string& name, double y_lo, double y_hi, double delta, double start_x) {
  StripTrap st;
  st.name = name;
  st.y_lo = y_lo;
  st.y_hi = y_hi;
  st.delta = delta;
  const double H = 0.5 * (y_hi - y_lo);
  const double yc = 0.5 * (y_hi + y_lo);
  st.r = 0.5 * (H + 1.0);  // strictly between H and 1
  st.normalized = hourglass_params(st.r / H, delta / H, 1.0 / H + 1.0);
  for (const Vec2& p : st.normalized.S) {
    const Vec2 q{p.x * H, yc + p.y * H};
    if (norm(q) < 1.0) st.S.push_back(q);
  }
  // Start on the hourglass axis nearest to start_x (even multiples of a).
  const double a = st.normalized.a * H;
  st.start_x = 2 * a * std::ceil(start_x / (2 * a));
  return st;
}

inline TrapProblem strip_problem(const StripTrap& st) {
  const double H = 0.5 * (st.y_hi - st.y_lo);
  const double yc = 0.5 * (st.y_hi + st.y_lo);
  TrapProblem pb;
  pb.length = st.r / H;
  for (const Vec2& q : st.S) pb.obstacles.push_back({q.x / H, (q.y - yc) / H});
  pb.start = {st.start_x / H, 0};
  pb.band = st.delta / H / 2;
  pb.window = pb.band + 2 * st.normalized.a;
  return pb;
}

}  // namespace detail

inline MidpointBox midpoint_box_sets(double eps, bool certify = true, std::size_t max_states = 2'000'000,
                                     double eps1 = -1, double eps2 = -1) {
  if (!(eps > 0 && eps < 0.25)) throw std::invalid_argument("midpoint_box_sets: need 0 < eps < 1/4");
  if (eps1 < 0) eps1 = eps / 3;
  if (eps2 < 0) eps2 = 2 * eps / 3;
  if (!(0 < eps1 && eps1 < eps2 && eps2 < eps)) throw std::invalid_argument("midpoint_box_sets: need 0 < eps1 < eps2 < eps");
  MidpointBox out{eps, eps1, eps2, 0, {}, {}};
  const double hm = std::sqrt(1 - eps1 * eps1);
  out.strips.push_back(detail::make_strip("middle", -hm, hm, eps2 - eps1, eps2));
  out.strips.push_back(detail::make_strip("upper", -0.5 + eps, 1.0, eps - eps2, 0.0));
  out.strips.push_back(detail::make_strip("lower", -1.0, 0.5 - eps, eps - eps2, 0.0));
  for (auto& st : out.strips) {
    out.r = std::max(out.r, st.r);
    out.S.insert(out.S.end(), st.S.begin(), st.S.end());
    if (!certify) continue;
    st.attempted = true;
    const TrapProblem pb = detail::strip_problem(st);
    st.certificate = certify_trap(pb, auto_grid(pb, max_states));
  }
  return out;
}

}  // namespace confspace
