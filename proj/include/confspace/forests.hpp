#pragma once
// Ordered forests on {1..n} and integer classes in the forest basis of the
// cohomology of the point configuration space.

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "confspace/exact.hpp"

namespace confspace {

struct Edge {
  int from = 0;
  int to = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed graph on {1..n}: every edge i->j has i < j and every vertex has
/// at most one incoming edge. Edges are kept sorted by terminal vertex, which
/// fixes the orientation of the associated cohomology generator.
class OrderedForest {
 public:
  OrderedForest() = default;

  OrderedForest(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("ordered forest needs n >= 1");
    std::vector<bool> has_parent(static_cast<std::size_t>(n_) + 1, false);
    for (const Edge& e : edges_) {
      if (e.from < 1 || e.to > n_ || e.from >= e.to) {
        throw std::invalid_argument("ordered forest edge " + std::to_string(e.from) + "->" +
                                    std::to_string(e.to) + " must satisfy 1 <= i < j <= n");
      }
      if (has_parent[e.to]) {
        throw std::invalid_argument("ordered forest vertex " + std::to_string(e.to) +
                                    " has in-degree > 1");
      }
      has_parent[e.to] = true;
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.to < b.to; });
  }

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(int from, int to) const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [&](const Edge& e) { return e.from == from && e.to == to; });
  }

  /// 0-based position of edge from->to in terminal-vertex order, or -1.
  int edge_index(int from, int to) const {
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      if (edges_[k].from == from && edges_[k].to == to) return static_cast<int>(k);
    }
    return -1;
  }

  /// Forest with the edge at `index` removed.
  OrderedForest without_edge(std::size_t index) const {
    std::vector<Edge> rest;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      if (k != index) rest.push_back(edges_[k]);
    }
    return OrderedForest(n_, std::move(rest));
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      if (k) os << ',';
      os << edges_[k].from << "->" << edges_[k].to;
    }
    os << '}';
    return os.str();
  }

  // Canonical order: n first, then lexicographic on the sorted edge list.
  friend auto operator<=>(const OrderedForest& a, const OrderedForest& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.edges_.begin(), a.edges_.end(),
                                                  b.edges_.begin(), b.edges_.end());
  }
  friend bool operator==(const OrderedForest& a, const OrderedForest& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 1;
  std::vector<Edge> edges_;
};

/// Parses "1-2,2-3" (or "1->2,2->3") into a forest on n vertices.
inline OrderedForest parse_forest(int n, const std::string& text) {
  std::vector<Edge> edges;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty() || token == "{}") continue;
    auto dash = token.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("bad edge token: " + token);
    std::string rhs = token.substr(dash + 1);
    if (!rhs.empty() && rhs[0] == '>') rhs.erase(0, 1);
    edges.push_back({std::stoi(token.substr(0, dash)), std::stoi(rhs)});
  }
  return OrderedForest(n, std::move(edges));
}

/// Every ordered forest on n vertices with exactly j edges, in canonical order.
inline std::vector<OrderedForest> enumerate_forests(int n, int j) {
  if (n < 1) throw std::invalid_argument("enumerate_forests: n must be >= 1");
  if (j < 0 || j > n - 1) throw std::invalid_argument("enumerate_forests: need 0 <= j <= n-1");
  std::vector<OrderedForest> out;
  // Pick the j vertices that receive an edge, then a smaller parent for each.
  std::vector<int> terminals;
  std::function<void(int)> choose = [&](int next) {
    if (static_cast<int>(terminals.size()) == j) {
      std::vector<Edge> edges(terminals.size());
      std::function<void(std::size_t)> assign = [&](std::size_t k) {
        if (k == terminals.size()) {
          out.emplace_back(n, edges);
          return;
        }
        for (int p = 1; p < terminals[k]; ++p) {
          edges[k] = {p, terminals[k]};
          assign(k + 1);
        }
      };
      assign(0);
      return;
    }
    for (int t = next; t <= n; ++t) {
      terminals.push_back(t);
      choose(t + 1);
      terminals.pop_back();
    }
  };
  choose(2);
  std::sort(out.begin(), out.end());
  return out;
}

struct ComponentProfile {
  std::vector<int> parts;  // sizes >= 2, ascending
  int edge_count = 0;

  friend bool operator==(const ComponentProfile&, const ComponentProfile&) = default;
};

inline ComponentProfile component_profile(const OrderedForest& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.n()) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (const Edge& e : g.edges()) parent[find(e.from)] = find(e.to);
  std::map<int, int> sizes;
  for (int v = 1; v <= g.n(); ++v) ++sizes[find(v)];
  ComponentProfile p;
  for (const auto& [root, size] : sizes) {
    if (size >= 2) {
      p.parts.push_back(size);
      p.edge_count += size - 1;
    }
  }
  std::sort(p.parts.begin(), p.parts.end());
  return p;
}

/// Integer combination of ordered forests sharing n and edge count.
class CohomClass {
 public:
  CohomClass(int n, int degree) : n_(n), degree_(degree) {}

  static CohomClass of(const OrderedForest& g, std::int64_t coeff = 1) {
    CohomClass c(g.n(), static_cast<int>(g.edge_count()));
    c.add(g, coeff);
    return c;
  }

  int n() const { return n_; }
  int degree() const { return degree_; }
  const std::map<OrderedForest, std::int64_t>& terms() const { return terms_; }

  std::int64_t coefficient(const OrderedForest& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? 0 : it->second;
  }

  CohomClass& add(const OrderedForest& g, std::int64_t coeff) {
    if (g.n() != n_ || static_cast<int>(g.edge_count()) != degree_) {
      throw std::invalid_argument("CohomClass: term " + g.to_string() + " does not match degree " +
                                  std::to_string(degree_) + " on " + std::to_string(n_) + " vertices");
    }
    if (coeff == 0) return *this;
    auto& slot = terms_[g];
    slot += coeff;
    if (slot == 0) terms_.erase(g);
    return *this;
  }

  CohomClass& operator+=(const CohomClass& o) {
    for (const auto& [g, c] : o.terms_) add(g, c);
    return *this;
  }
  CohomClass& operator-=(const CohomClass& o) {
    for (const auto& [g, c] : o.terms_) add(g, -c);
    return *this;
  }
  friend CohomClass operator+(CohomClass a, const CohomClass& b) { return a += b; }
  friend CohomClass operator-(CohomClass a, const CohomClass& b) { return a -= b; }

  /// Coefficients against `basis` (which must contain every term).
  std::vector<std::int64_t> coordinates(const std::vector<OrderedForest>& basis) const {
    std::vector<std::int64_t> v(basis.size(), 0);
    std::size_t found = 0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      auto it = terms_.find(basis[k]);
      if (it != terms_.end()) {
        v[k] = it->second;
        ++found;
      }
    }
    if (found != terms_.size()) throw std::invalid_argument("CohomClass: basis misses a term");
    return v;
  }

  std::int64_t coefficient_sum() const {
    std::int64_t s = 0;
    for (const auto& [g, c] : terms_) s += c;
    return s;
  }

  friend bool operator==(const CohomClass&, const CohomClass&) = default;

 private:
  int n_;
  int degree_;
  std::map<OrderedForest, std::int64_t> terms_;
};

/// Signed sum of the three 2-edge subforests of a connected 3-edge forest on
/// four vertices: +{e2,e3} - {e1,e3} + {e1,e2}, edges in terminal order.
inline CohomClass top_kernel_element(const OrderedForest& t) {
  if (t.n() != 4 || t.edge_count() != 3 || component_profile(t).parts != std::vector<int>{4}) {
    throw std::invalid_argument("top_kernel_element: need a connected 3-edge forest on 4 vertices, got " +
                                t.to_string());
  }
  CohomClass c(4, 2);
  c.add(t.without_edge(0), +1);
  c.add(t.without_edge(1), -1);
  c.add(t.without_edge(2), +1);
  return c;
}

inline bool edges_share_vertex(const Edge& a, const Edge& b) {
  return a.from == b.from || a.from == b.to || a.to == b.from || a.to == b.to;
}

/// Degree-1 class (first edge) - (second edge) for a 2-edge forest whose
/// edges meet in a vertex.
inline CohomClass shared_vertex_difference(const OrderedForest& g) {
  if (g.edge_count() != 2 || !edges_share_vertex(g.edges()[0], g.edges()[1])) {
    throw std::invalid_argument("shared_vertex_difference: need two edges sharing a vertex, got " +
                                g.to_string());
  }
  CohomClass c(g.n(), 1);
  c.add(OrderedForest(g.n(), {g.edges()[0]}), +1);
  c.add(OrderedForest(g.n(), {g.edges()[1]}), -1);
  return c;
}

/// Radii at which ker i*_{4,r} jumps. Each band is half-open on the left.
struct LadderThresholds {
  static constexpr double collinear4 = 0.25;
  static constexpr double collinear3 = 1.0 / 3.0;
  static double square() { return 1.0 / (1.0 + std::sqrt(2.0)); }
};

/// Known generators of ker i*_{4,r}, grouped by degree 0..3.
inline std::array<std::vector<CohomClass>, 4> kernel_generators_n4(double r) {
  if (!(r > 0.0)) throw std::invalid_argument("kernel_generators_n4: r must be positive");
  std::array<std::vector<CohomClass>, 4> gens;
  if (r > LadderThresholds::square()) {
    // Conf_{4,r} is empty: everything dies.
    for (int j = 0; j <= 3; ++j) {
      for (const auto& g : enumerate_forests(4, j)) gens[j].push_back(CohomClass::of(g));
    }
    return gens;
  }
  if (r > LadderThresholds::collinear4) {
    for (const auto& t : enumerate_forests(4, 3)) {
      gens[3].push_back(CohomClass::of(t));
      gens[2].push_back(top_kernel_element(t));
    }
  }
  if (r > LadderThresholds::collinear3) {
    for (const auto& g : enumerate_forests(4, 2)) {
      if (!edges_share_vertex(g.edges()[0], g.edges()[1])) continue;
      gens[2].push_back(CohomClass::of(g));
      gens[1].push_back(shared_vertex_difference(g));
    }
  }
  return gens;
}

/// Exact rank of a family of classes of one degree, over the forest basis.
inline std::size_t class_rank(const std::vector<CohomClass>& classes, int n, int degree) {
  if (classes.empty()) return 0;
  const auto basis = enumerate_forests(n, degree);
  IntMatrix m;
  m.reserve(classes.size());
  for (const auto& c : classes) m.push_back(c.coordinates(basis));
  return exact_rank(m);
}

/// dim ker i*_{4,r} in degrees 0..3.
inline std::array<int, 4> kernel_ladder_n4(double r) {
  const auto gens = kernel_generators_n4(r);
  std::array<int, 4> dims{};
  for (int j = 0; j <= 3; ++j) dims[j] = static_cast<int>(class_rank(gens[j], 4, j));
  return dims;
}

}  // namespace confspace
