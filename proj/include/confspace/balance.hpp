#pragma once
// Stress graphs of disk configurations and the balance test.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "confspace/geometry.hpp"
#include "confspace/lp.hpp"

namespace confspace {

struct StressEdge {
  enum class Kind { Internal, Boundary };
  Kind kind;
  int i;  // internal vertex (0-based)
  int j;  // second internal vertex, or boundary vertex index
};

struct StressGraph {
  std::vector<Vec2> internal;
  std::vector<Vec2> boundary;
  std::vector<StressEdge> edges;
  double radius = 0.0;
  double tol = 0.0;

  std::size_t internal_edge_count() const {
    return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [](const StressEdge& e) {
      return e.kind == StressEdge::Kind::Internal;
    }));
  }
  std::size_t boundary_edge_count() const { return edges.size() - internal_edge_count(); }

  /// Outward force direction that edge e exerts on its internal endpoint `v`.
  Vec2 push_on(const StressEdge& e, int v) const {
    if (e.kind == StressEdge::Kind::Boundary) {
      const Vec2 d = internal[e.i] - boundary[e.j];
      return d / norm(d);
    }
    const Vec2 d = v == e.i ? internal[e.i] - internal[e.j] : internal[e.j] - internal[e.i];
    return d / norm(d);
  }

  /// Component id per internal vertex (isolated vertices get their own).
  std::vector<int> components() const {
    std::vector<int> parent(internal.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (const auto& e : edges) {
      if (e.kind == StressEdge::Kind::Internal) parent[find(e.i)] = find(e.j);
    }
    std::vector<int> comp(internal.size());
    for (std::size_t v = 0; v < internal.size(); ++v) comp[v] = find(static_cast<int>(v));
    return comp;
  }
};

constexpr double kContactTol = 1e-6;
constexpr double kBalanceResidualTol = 1e-8;

inline StressGraph contact_graph(const DiskConfig& c, double tol = kContactTol) {
  if (!(c.radius > 0)) throw std::invalid_argument("contact_graph: radius must be positive");
  StressGraph g;
  g.internal = c.centers;
  g.radius = c.radius;
  g.tol = tol;
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(distance(c.centers[i], c.centers[j]) - 2 * c.radius) <= tol) {
        g.edges.push_back({StressEdge::Kind::Internal, i, j});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    const double len = norm(c.centers[i]);
    if (len > 0 && std::abs(len - (1 - c.radius)) <= tol) {
      g.boundary.push_back(c.centers[i] / len);
      g.edges.push_back({StressEdge::Kind::Boundary, i, static_cast<int>(g.boundary.size()) - 1});
    }
  }
  return g;
}

struct BalanceResult {
  bool balanced = false;
  std::vector<double> weights;
  double residual = std::numeric_limits<double>::infinity();
};

enum class WeightMode {
  AtLeastOne,   // every contact edge carries weight >= 1
  AnySupport,   // weights >= 0 summing to 1 (some nonempty support)
};

namespace detail {

inline DenseMatrix equilibrium_matrix(const StressGraph& g) {
  const std::size_t m = g.edges.size();
  DenseMatrix A;
  // Two rows per internal vertex.
  for (std::size_t v = 0; v < g.internal.size(); ++v) {
    std::vector<double> rx(m, 0.0), ry(m, 0.0);
    bool any = false;
    for (std::size_t e = 0; e < m; ++e) {
      const auto& ed = g.edges[e];
      const bool touches = ed.i == static_cast<int>(v) ||
                           (ed.kind == StressEdge::Kind::Internal && ed.j == static_cast<int>(v));
      if (!touches) continue;
      const Vec2 f = g.push_on(ed, static_cast<int>(v));
      rx[e] = f.x;
      ry[e] = f.y;
      any = true;
    }
    if (any) {
      A.push_back(std::move(rx));
      A.push_back(std::move(ry));
    }
  }
  // Two rows per component that has boundary points: stresses on the
  // boundary points (pushing radially outward) sum to zero.
  const auto comp = g.components();
  std::vector<int> roots;
  for (const auto& e : g.edges) {
    if (e.kind == StressEdge::Kind::Boundary) roots.push_back(comp[e.i]);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  for (int root : roots) {
    std::vector<double> rx(m, 0.0), ry(m, 0.0);
    for (std::size_t e = 0; e < m; ++e) {
      const auto& ed = g.edges[e];
      if (ed.kind != StressEdge::Kind::Boundary || comp[ed.i] != root) continue;
      rx[e] = g.boundary[ed.j].x;
      ry[e] = g.boundary[ed.j].y;
    }
    A.push_back(std::move(rx));
    A.push_back(std::move(ry));
  }
  return A;
}

}  // namespace detail

/// Max |A w| over the equilibrium equations.
inline double equilibrium_residual(const StressGraph& g, const std::vector<double>& w) {
  const auto A = detail::equilibrium_matrix(g);
  double res = 0;
  for (const auto& row : A) {
    double s = 0;
    for (std::size_t e = 0; e < row.size(); ++e) s += row[e] * w[e];
    res = std::max(res, std::abs(s));
  }
  return res;
}

inline BalanceResult is_balanced(const StressGraph& g, WeightMode mode = WeightMode::AtLeastOne,
                                 double residual_tol = kBalanceResidualTol) {
  BalanceResult out;
  if (g.edges.empty()) return out;
  const auto A = detail::equilibrium_matrix(g);
  const std::size_t m = g.edges.size();
  std::vector<double> w;
  if (mode == WeightMode::AtLeastOne) {
    // w = 1 + v with v >= 0:  A v = -A 1.
    std::vector<double> rhs(A.size(), 0.0);
    for (std::size_t i = 0; i < A.size(); ++i) {
      for (double a : A[i]) rhs[i] -= a;
    }
    auto v = nonnegative_solution(A, rhs);
    if (!v) return out;
    w.resize(m);
    for (std::size_t e = 0; e < m; ++e) w[e] = 1.0 + (*v)[e];
  } else {
    DenseMatrix B = A;
    B.emplace_back(m, 1.0);
    std::vector<double> rhs(B.size(), 0.0);
    rhs.back() = 1.0;
    auto v = nonnegative_solution(B, rhs);
    if (!v) return out;
    w = *v;
  }
  out.residual = equilibrium_residual(g, w);
  out.balanced = out.residual <= residual_tol;
  out.weights = std::move(w);
  return out;
}

// ---------------------------------------------------------------------------

struct Ball {
  Vec2 center;
  double radius = 0.0;
};

/// Ball containing a straight-edge tree of total length L with radius <= L/2,
/// built leaf by leaf. `edges` must form a tree on the given vertices.
inline Ball enclosing_ball_of_tree(const std::vector<Vec2>& vertices, const std::vector<std::pair<int, int>>& edges) {
  const std::size_t nv = vertices.size();
  if (nv == 0) throw std::invalid_argument("enclosing_ball_of_tree: empty tree");
  if (edges.size() + 1 != nv) throw std::invalid_argument("enclosing_ball_of_tree: edges do not form a tree");
  std::vector<std::vector<int>> adj(nv);
  for (const auto& [a, b] : edges) {
    adj.at(a).push_back(b);
    adj.at(b).push_back(a);
  }
  // Order vertices by BFS from 0; adding them in that order attaches each new
  // vertex as a leaf of the tree built so far.
  std::vector<int> order{0}, parent(nv, -1);
  std::vector<bool> seen(nv, false);
  seen[0] = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (int w : adj[order[k]]) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = order[k];
        order.push_back(w);
      }
    }
  }
  if (order.size() != nv) throw std::invalid_argument("enclosing_ball_of_tree: tree is disconnected");

  Ball ball{vertices[0], 0.0};
  for (std::size_t k = 1; k < order.size(); ++k) {
    const Vec2 a = vertices[parent[order[k]]];
    const Vec2 b = vertices[order[k]];
    const Ball edge{0.5 * (a + b), 0.5 * distance(a, b)};
    // Smallest ball containing both balls.
    const double d = distance(ball.center, edge.center);
    if (d + edge.radius <= ball.radius) continue;
    if (d + ball.radius <= edge.radius) {
      ball = edge;
      continue;
    }
    const double R = 0.5 * (d + ball.radius + edge.radius);
    ball.center = ball.center + ((R - ball.radius) / d) * (edge.center - ball.center);
    ball.radius = R;
  }
  return ball;
}

// ---------------------------------------------------------------------------
// Canonical balanced configurations.

/// n disks of radius 1/n along the diameter in direction `angle`.
inline DiskConfig diameter_config(int n, double angle = 0.0) {
  if (n < 1) throw std::invalid_argument("diameter_config: n must be >= 1");
  const Vec2 u = unit_from_turns(angle);
  DiskConfig c{{}, 1.0 / n};
  for (int i = 1; i <= n; ++i) c.centers.push_back((-1.0 + (2.0 * i - 1.0) / n) * u);
  return c;
}

/// Four disks in a square, tangent to each other and to the boundary.
inline DiskConfig square_config(double angle = 0.0) {
  const double r = 1.0 / (1.0 + std::sqrt(2.0));
  DiskConfig c{{}, r};
  for (int k = 0; k < 4; ++k) c.centers.push_back((1 - r) * unit_from_turns(angle + 0.125 + 0.25 * k));
  return c;
}

}  // namespace confspace
