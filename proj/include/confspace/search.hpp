#pragma once
// Multistart search for balanced configurations at a prescribed radius, and
// the small-radius classifier.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "confspace/balance.hpp"

namespace confspace {

struct SearchOptions {
  int trials = 1000;
  std::uint64_t seed = 0;
  double radius_tol = 1e-6;     // |tau* - r| allowed for a hit
  double contact_tol = kContactTol;
  std::size_t max_hits = 16;
};

struct SearchHit {
  DiskConfig config;  // radius = tau of the polished centers
  BalanceResult balance;
  std::string family;  // parametrization that produced it
  int trial = 0;
};

namespace detail {

// Linear parametrization centers = L p, flattened as (x1, y1, x2, y2, ...).
struct Parametrization {
  std::string name;
  Eigen::MatrixXd L;
};

inline Parametrization free_parametrization(int n) {
  return {"free", Eigen::MatrixXd::Identity(2 * n, 2 * n)};
}

inline Parametrization collinear_parametrization(int n, double angle) {
  const Vec2 u = unit_from_turns(angle);
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(2 * n, n);
  for (int i = 0; i < n; ++i) {
    L(2 * i, i) = u.x;
    L(2 * i + 1, i) = u.y;
  }
  return {"collinear", L};
}

// C_k symmetric: floor(n/k) orbits of k disks plus possibly one at the origin.
inline Parametrization rotational_parametrization(int n, int k) {
  const int orbits = n / k;
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(2 * n, 2 * orbits);
  for (int o = 0; o < orbits; ++o) {
    for (int t = 0; t < k; ++t) {
      const Vec2 c = unit_from_turns(double(t) / k);
      const int row = 2 * (o * k + t);
      L(row, 2 * o) = c.x;
      L(row, 2 * o + 1) = -c.y;
      L(row + 1, 2 * o) = c.y;
      L(row + 1, 2 * o + 1) = c.x;
    }
  }
  return {"C" + std::to_string(k), L};
}

inline std::vector<int> rotational_orders(int n) {
  std::vector<int> ks;
  for (int k = 2; k <= n; ++k) {
    if (n % k <= 1 && n / k >= 1) ks.push_back(k);
  }
  return ks;
}

// Constraint values g (pair half-distances, then wall slacks) and their
// gradients with respect to the flattened centers.
struct TauTerms {
  Eigen::VectorXd g;
  Eigen::MatrixXd grad;  // rows = terms, cols = 2n
};

inline TauTerms tau_terms(const Eigen::VectorXd& x) {
  const int n = static_cast<int>(x.size() / 2);
  const int m = n * (n - 1) / 2 + n;
  TauTerms t{Eigen::VectorXd(m), Eigen::MatrixXd::Zero(m, 2 * n)};
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      const double dx = x[2 * i] - x[2 * j], dy = x[2 * i + 1] - x[2 * j + 1];
      const double d = std::max(std::hypot(dx, dy), 1e-300);
      t.g[k] = 0.5 * d;
      t.grad(k, 2 * i) = 0.5 * dx / d;
      t.grad(k, 2 * i + 1) = 0.5 * dy / d;
      t.grad(k, 2 * j) = -0.5 * dx / d;
      t.grad(k, 2 * j + 1) = -0.5 * dy / d;
    }
  }
  for (int i = 0; i < n; ++i, ++k) {
    const double d = std::hypot(x[2 * i], x[2 * i + 1]);
    t.g[k] = 1.0 - d;
    if (d > 0) {
      t.grad(k, 2 * i) = -x[2 * i] / d;
      t.grad(k, 2 * i + 1) = -x[2 * i + 1] / d;
    }
  }
  return t;
}

inline double soft_min(const Eigen::VectorXd& g, double beta, Eigen::VectorXd* weights) {
  const double lo = g.minCoeff();
  Eigen::VectorXd e = (-beta * (g.array() - lo)).exp().matrix();
  const double s = e.sum();
  if (weights) *weights = e / s;
  return lo - std::log(s) / beta;
}

inline std::vector<Vec2> unflatten(const Eigen::VectorXd& x) {
  std::vector<Vec2> c(static_cast<std::size_t>(x.size() / 2));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = {x[2 * i], x[2 * i + 1]};
  return c;
}

// Gradient ascent on a smoothed tau with an increasing sharpness schedule.
inline Eigen::VectorXd ascend(const Parametrization& P, Eigen::VectorXd p) {
  for (double beta : {30.0, 100.0, 300.0, 1000.0, 3000.0, 10000.0}) {
    double step = 0.05;
    Eigen::VectorXd w;
    auto terms = tau_terms(P.L * p);
    double f = soft_min(terms.g, beta, &w);
    for (int it = 0; it < 80 && step > 1e-9; ++it) {
      const Eigen::VectorXd grad = P.L.transpose() * (terms.grad.transpose() * w);
      const double gn = grad.norm();
      if (gn < 1e-12) break;
      const Eigen::VectorXd cand = p + (step / std::max(1.0, gn)) * grad;
      auto ct = tau_terms(P.L * cand);
      Eigen::VectorXd cw;
      const double cf = soft_min(ct.g, beta, &cw);
      if (cf > f) {
        const double gain = cf - f;
        p = cand;
        f = cf;
        terms = std::move(ct);
        w = std::move(cw);
        step *= 1.5;
        if (gain < 1e-13) break;
      } else {
        step *= 0.5;
      }
    }
  }
  return p;
}

// Gauss-Newton (minimum-norm steps) onto the set where all near-active
// terms share one value t.
inline Eigen::VectorXd polish(const Parametrization& P, Eigen::VectorXd p, double window) {
  const auto t0 = tau_terms(P.L * p);
  const double tmin = t0.g.minCoeff();
  std::vector<int> active;
  for (int k = 0; k < t0.g.size(); ++k) {
    if (t0.g[k] <= tmin + window) active.push_back(k);
  }
  const int np = static_cast<int>(p.size());
  Eigen::VectorXd z(np + 1);
  z.head(np) = p;
  z[np] = tmin;
  for (int it = 0; it < 40; ++it) {
    const auto t = tau_terms(P.L * z.head(np));
    Eigen::VectorXd F(active.size());
    Eigen::MatrixXd J(active.size(), np + 1);
    const Eigen::MatrixXd JL = t.grad * P.L;
    for (std::size_t a = 0; a < active.size(); ++a) {
      F[a] = t.g[active[a]] - z[np];
      J.row(a).head(np) = JL.row(active[a]);
      J(a, np) = -1.0;
    }
    if (F.cwiseAbs().maxCoeff() < 1e-14) break;
    z -= J.completeOrthogonalDecomposition().solve(F);
  }
  return z.head(np);
}

inline std::vector<double> pair_signature(const DiskConfig& c) {
  std::vector<double> s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    s.push_back(norm(c.centers[i]));
    for (std::size_t j = i + 1; j < c.size(); ++j) s.push_back(distance(c.centers[i], c.centers[j]));
  }
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace detail

/// Random multistart: ascend tau under a random symmetry-restricted
/// parametrization, polish the active contacts, keep balanced results whose
/// radius is within radius_tol of r. An empty result is evidence only.
inline std::vector<SearchHit> search_balanced(int n, double r, const SearchOptions& opt = {}) {
  if (n < 2 || !(r > 0)) throw std::invalid_argument("search_balanced: need n >= 2 and r > 0");
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const auto orders = detail::rotational_orders(n);
  std::vector<SearchHit> hits;
  std::vector<std::vector<double>> seen;

  for (int trial = 0; trial < opt.trials && hits.size() < opt.max_hits; ++trial) {
    detail::Parametrization P;
    switch (trial % 3) {
      case 0: P = detail::free_parametrization(n); break;
      case 1: P = detail::collinear_parametrization(n, unif(rng)); break;
      default: {
        const int k = orders[static_cast<std::size_t>(unif(rng) * orders.size()) % orders.size()];
        P = detail::rotational_parametrization(n, k);
      }
    }
    // Random start inside the disk, parameters drawn per coordinate.
    Eigen::VectorXd p(P.L.cols());
    for (int i = 0; i < p.size(); ++i) p[i] = 1.6 * unif(rng) - 0.8;
    if (P.name == "collinear") std::sort(p.data(), p.data() + p.size());

    p = detail::ascend(P, p);
    const auto coarse = detail::tau_terms(P.L * p).g.minCoeff();
    if (std::abs(coarse - r) > 5e-3) continue;
    p = detail::polish(P, p, 2e-3);
    const auto centers = detail::unflatten(P.L * p);
    double t;
    try {
      t = tau(centers);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (std::abs(t - r) > opt.radius_tol) continue;
    DiskConfig cfg{centers, t};
    const auto g = contact_graph(cfg, opt.contact_tol);
    auto bal = is_balanced(g);
    if (!bal.balanced) continue;
    const auto sig = detail::pair_signature(cfg);
    const bool dup = std::any_of(seen.begin(), seen.end(), [&](const std::vector<double>& s) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (std::abs(s[i] - sig[i]) > 1e-6) return false;
      }
      return true;
    });
    if (dup) continue;
    seen.push_back(sig);
    hits.push_back({std::move(cfg), std::move(bal), P.name, trial});
  }
  return hits;
}

// ---------------------------------------------------------------------------

struct Classification {
  std::string label;  // "diameter", "above threshold", "violation"
  std::string detail;
};

/// Is there a contact path of k = round(1/r) disks through the origin, lying
/// on one diameter, with both ends touching the boundary at antipodal points?
inline bool has_diameter_chain(const DiskConfig& c, double tol) {
  const double r = c.radius;
  const int k = static_cast<int>(std::lround(1.0 / r));
  if (k < 1 || std::abs(1.0 / k - r) > tol) return false;
  const auto g = contact_graph(c, tol);
  for (const auto& e : g.edges) {
    if (e.kind != StressEdge::Kind::Boundary) continue;
    const Vec2 u = g.boundary[e.j];
    // Expected centers along -u .. u.
    std::vector<int> chain;
    for (int i = 1; i <= k; ++i) {
      const Vec2 want = (1.0 - (2.0 * i - 1.0) / k) * u;
      int found = -1;
      for (std::size_t v = 0; v < c.size(); ++v) {
        if (distance(c.centers[v], want) <= 10 * tol) found = static_cast<int>(v);
      }
      if (found < 0) break;
      chain.push_back(found);
    }
    if (static_cast<int>(chain.size()) == k) return true;
  }
  return false;
}

inline std::vector<Classification> classify_small_radius(int n, const std::vector<DiskConfig>& configs,
                                                         double tol = kContactTol) {
  const double threshold = 3.0 / (2.0 * n + 3.0);
  std::vector<Classification> out;
  for (const auto& c : configs) {
    if (c.radius > threshold + tol) {
      out.push_back({"above threshold", "r = " + std::to_string(c.radius) + " > 3/(2n+3) = " + std::to_string(threshold)});
    } else if (has_diameter_chain(c, tol)) {
      out.push_back({"diameter", std::to_string(std::lround(1.0 / c.radius)) + " disks on a diameter"});
    } else {
      out.push_back({"violation", "balanced configuration at r = " + std::to_string(c.radius) +
                                      " <= 3/(2n+3) is not a diameter"});
    }
  }
  return out;
}

}  // namespace confspace
