#pragma once
// Pairings between the torus classes sigma o q_n and the top-degree forest
// classes, the dual-basis matrix, and the recursive dual expansion.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "confspace/exact.hpp"
#include "confspace/forests.hpp"

namespace confspace {

/// Bijection of {1..n}, stored as the image list sigma(1), ..., sigma(n).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[v]) {
        throw std::invalid_argument("permutation images must be a bijection of 1..n");
      }
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
  }

  int sign() const {
    int s = 1;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j] - 1) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  }

  /// sigma^{(l)}: keeps values below l, shifts the rest up, appends l.
  Permutation extended(int l) const {
    std::vector<int> v;
    v.reserve(images_.size() + 1);
    for (int x : images_) v.push_back(x < l ? x : x + 1);
    v.push_back(l);
    return Permutation(std::move(v));
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? " " : "") << images_[i];
    os << ']';
    return os.str();
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Permutations of {1..n} fixing 1, lexicographic on image lists.
inline std::vector<Permutation> permutations_fixing_one(int n) {
  if (n < 1) throw std::invalid_argument("permutations_fixing_one: n must be >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin() + 1, v.end()));
  return out;
}

struct RelabeledGraph {
  std::vector<Edge> edges;  // may contain i > j
  bool is_ordered_forest = false;
};

/// sigma(G): edge i->j whenever G has sigma(i)->sigma(j).
inline RelabeledGraph sigma_apply(const Permutation& sigma, const OrderedForest& g) {
  if (sigma.n() != g.n()) throw std::invalid_argument("sigma_apply: size mismatch");
  const Permutation inv = sigma.inverse();
  RelabeledGraph out;
  out.is_ordered_forest = true;
  for (const Edge& e : g.edges()) {
    Edge f{inv(e.from), inv(e.to)};
    if (f.from > f.to) out.is_ordered_forest = false;
    out.edges.push_back(f);
  }
  return out;
}

/// <G, sigma o q_n> for an (n-1)-edge forest G and sigma(1) = 1.
inline int pairing_forest_qn(const OrderedForest& g, const Permutation& sigma) {
  if (sigma.n() != g.n()) throw std::invalid_argument("pairing_forest_qn: size mismatch");
  if (static_cast<int>(g.edge_count()) != g.n() - 1) {
    throw std::invalid_argument("pairing_forest_qn: forest must have n-1 edges");
  }
  if (sigma(1) != 1) throw std::invalid_argument("pairing_forest_qn: sigma must fix 1");
  return sigma_apply(sigma, g).is_ordered_forest ? sigma.sign() : 0;
}

struct PairingMatrix {
  int n = 0;
  std::vector<OrderedForest> rows;
  std::vector<Permutation> cols;
  IntMatrix entries;
};

constexpr int kMaxDualBasisN = 7;

inline PairingMatrix dual_basis_matrix(int n) {
  if (n < 2) throw std::invalid_argument("dual_basis_matrix: n must be >= 2");
  if (n > kMaxDualBasisN) {
    throw std::length_error("dual_basis_matrix: (n-1)! = " + std::to_string(n - 1) +
                            "! columns exceeds the supported size (n <= " +
                            std::to_string(kMaxDualBasisN) + ")");
  }
  PairingMatrix m;
  m.n = n;
  m.rows = enumerate_forests(n, n - 1);
  m.cols = permutations_fixing_one(n);
  m.entries.assign(m.rows.size(), std::vector<std::int64_t>(m.cols.size(), 0));
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    for (std::size_t j = 0; j < m.cols.size(); ++j) m.entries[i][j] = pairing_forest_qn(m.rows[i], m.cols[j]);
  }
  return m;
}

namespace detail {

// Recursion over G^{(k)} (append edge k->n) written for the action in which
// sigma relabels edge i->j as sigma(i)->sigma(j).
inline std::map<Permutation, std::int64_t> dual_expansion_direct(const OrderedForest& g) {
  const int n = g.n();
  if (n == 2) return {{Permutation::identity(2), 1}};
  const int last = static_cast<int>(g.edge_count()) - 1;
  const Edge top = g.edges()[last];
  if (top.to != n) throw std::logic_error("dual_expansion: spanning forest must end at vertex n");
  std::vector<Edge> rest(g.edges().begin(), g.edges().begin() + last);
  const OrderedForest smaller(n - 1, std::move(rest));
  const int k = top.from;

  std::map<Permutation, std::int64_t> out;
  auto add = [&](const Permutation& p, std::int64_t c) {
    auto& slot = out[p];
    slot += c;
    if (slot == 0) out.erase(p);
  };
  for (const auto& [sigma, a] : dual_expansion_direct(smaller)) {
    const int sk = sigma(k);
    add(sigma.extended(sk + 1), a);
    if (k > 1) add(sigma.extended(sk), -a);
  }
  return out;
}

}  // namespace detail

/// Coefficients a_tau with G* = sum a_tau sign(tau) (tau o q_n). The recursion
/// is stated for the opposite relabeling convention, so labels are inverted.
inline std::map<Permutation, std::int64_t> dual_expansion(const OrderedForest& g) {
  if (static_cast<int>(g.edge_count()) != g.n() - 1 || g.n() < 2) {
    throw std::invalid_argument("dual_expansion: forest must have n-1 edges, n >= 2");
  }
  std::map<Permutation, std::int64_t> out;
  for (const auto& [sigma, a] : detail::dual_expansion_direct(g)) out.emplace(sigma.inverse(), a);
  return out;
}

/// Degree of alpha_G o hhat_{a->b} for a 2-edge forest on four vertices.
inline int pairing_hhat(const OrderedForest& g, int a, int b) {
  if (g.n() != 4 || g.edge_count() != 2) throw std::invalid_argument("pairing_hhat: need a 2-edge forest on 4 vertices");
  if (!(1 <= a && a < b && b <= 4)) throw std::invalid_argument("pairing_hhat: need 1 <= a < b <= 4");
  const int idx = g.edge_index(a, b);
  if (idx < 0) return 0;
  return idx == 1 ? +1 : -1;
}

}  // namespace confspace
