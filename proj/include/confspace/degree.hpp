#pragma once
// Numeric degree of maps T^j -> T^j sampled on a grid: piecewise-linear
// interpolation on the Freudenthal triangulation, then a signed count of the
// preimages of one generic point.

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "confspace/errors.hpp"
#include "confspace/geometry.hpp"
#include "confspace/pairing.hpp"

namespace confspace {

using TorusMap = std::function<std::vector<double>(const std::vector<double>&)>;

namespace detail {

inline std::size_t flat_index(const std::vector<int>& idx, int N) {
  std::size_t f = 0;
  for (int v : idx) f = f * static_cast<std::size_t>(N) + static_cast<std::size_t>(((v % N) + N) % N);
  return f;
}

inline bool next_multi_index(std::vector<int>& idx, int N) {
  for (std::size_t a = idx.size(); a-- > 0;) {
    if (++idx[a] < N) return true;
    idx[a] = 0;
  }
  return false;
}

}  // namespace detail

/// Degree of F: (R/Z)^j -> (R/Z)^j from samples on an N^j grid.
/// Throws ResolutionError when neighbouring samples are too far apart for
/// the linear interpolation to be trusted.
inline int torus_map_degree(const TorusMap& F, int j, int N) {
  if (j < 1 || N < 2) throw std::invalid_argument("torus_map_degree: need j >= 1 and N >= 2");
  std::size_t total = 1;
  for (int a = 0; a < j; ++a) total *= static_cast<std::size_t>(N);

  std::vector<std::vector<double>> values(total);
  std::vector<int> idx(static_cast<std::size_t>(j), 0);
  do {
    std::vector<double> x(idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a) x[a] = double(idx[a]) / N;
    auto y = F(x);
    if (static_cast<int>(y.size()) != j) throw std::invalid_argument("torus_map_degree: map has wrong dimension");
    values[detail::flat_index(idx, N)] = std::move(y);
  } while (detail::next_multi_index(idx, N));

  Eigen::VectorXd target(j);
  for (int a = 0; a < j; ++a) target[a] = std::fmod(0.1234567 + 0.1 * a + 0.0371 * a * a, 1.0);

  std::vector<int> pi(static_cast<std::size_t>(j));
  long long count = 0;
  std::fill(idx.begin(), idx.end(), 0);
  do {
    std::iota(pi.begin(), pi.end(), 0);
    do {
      // Simplex idx = v_0, v_1 = v_0 + e_{pi0}, ...
      std::vector<Eigen::VectorXd> lift;
      std::vector<int> cur = idx;
      const auto& base = values[detail::flat_index(cur, N)];
      Eigen::VectorXd b0(j);
      for (int a = 0; a < j; ++a) b0[a] = base[a];
      lift.push_back(b0);
      Eigen::MatrixXd dom = Eigen::MatrixXd::Zero(j, j);
      for (int s = 0; s < j; ++s) {
        cur[pi[s]] += 1;
        const auto& val = values[detail::flat_index(cur, N)];
        Eigen::VectorXd v(j);
        for (int a = 0; a < j; ++a) {
          const double diff = wrap_signed_turns(val[a] - base[a]);
          if (std::abs(diff) >= 0.25) {
            throw ResolutionError("neighbouring grid samples differ by " + std::to_string(diff) +
                                  " turns; refine the grid (N = " + std::to_string(N) + ")");
          }
          v[a] = base[a] + diff;
        }
        lift.push_back(v);
        for (int t = 0; t <= s; ++t) dom(pi[t], s) = 1.0;
      }
      Eigen::MatrixXd D(j, j);
      for (int s = 0; s < j; ++s) D.col(s) = lift[s + 1] - lift[0];
      const double det = D.determinant();
      if (std::abs(det) < 1e-15) continue;
      const int orient = (det > 0 ? 1 : -1) * (dom.determinant() > 0 ? 1 : -1);

      Eigen::VectorXd lo = lift[0], hi = lift[0];
      for (const auto& v : lift) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
      }
      std::vector<int> kmin(j), kmax(j), k(j);
      for (int a = 0; a < j; ++a) {
        kmin[a] = static_cast<int>(std::floor(lo[a] - target[a]));
        kmax[a] = static_cast<int>(std::ceil(hi[a] - target[a]));
      }
      k = kmin;
      const auto lu = D.partialPivLu();
      while (true) {
        Eigen::VectorXd t = target;
        for (int a = 0; a < j; ++a) t[a] += k[a];
        const Eigen::VectorXd lam = lu.solve(t - lift[0]);
        if (lam.minCoeff() >= 0 && lam.sum() <= 1) count += orient;
        int a = j - 1;
        while (a >= 0 && ++k[a] > kmax[a]) {
          k[a] = kmin[a];
          --a;
        }
        if (a < 0) break;
      }
    } while (std::next_permutation(pi.begin(), pi.end()));
  } while (detail::next_multi_index(idx, N));
  return static_cast<int>(count);
}

/// alpha_G: the directions (in turns) of the edges of G, in edge order.
inline std::vector<double> angle_map(const OrderedForest& g, const std::vector<Vec2>& centers) {
  std::vector<double> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) out.push_back(turns_of(centers[e.to - 1] - centers[e.from - 1]));
  return out;
}

/// Configuration family over the j-torus.
using DiskFamily = std::function<std::vector<Vec2>(const std::vector<double>&)>;

/// Degree of alpha_G composed with a disk family. Also checks that adjacent
/// samples move every center by less than half the smallest center gap.
inline int family_degree(const DiskFamily& family, const OrderedForest& g, int grid) {
  const int j = static_cast<int>(g.edge_count());
  // Continuity probe along each axis before the real count.
  std::vector<int> idx(static_cast<std::size_t>(j), 0);
  do {
    std::vector<double> x(idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a) x[a] = double(idx[a]) / grid;
    const auto c0 = family(x);
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < c0.size(); ++p) {
      for (std::size_t q = p + 1; q < c0.size(); ++q) gap = std::min(gap, distance(c0[p], c0[q]));
    }
    for (int a = 0; a < j; ++a) {
      auto y = x;
      y[a] += 1.0 / grid;
      const auto c1 = family(y);
      for (std::size_t p = 0; p < c0.size(); ++p) {
        if (distance(c0[p], c1[p]) >= 0.5 * gap) {
          throw ResolutionError("disk " + std::to_string(p + 1) + " moves " +
                                std::to_string(distance(c0[p], c1[p])) + " between grid samples (N = " +
                                std::to_string(grid) + ")");
        }
      }
    }
  } while (detail::next_multi_index(idx, grid));
  return torus_map_degree([&](const std::vector<double>& x) { return angle_map(g, family(x)); }, j, grid);
}

/// sigma o q_n: disk sigma(i) sits where q_n puts disk i.
inline std::vector<Vec2> permuted_qn(const Permutation& sigma, const std::vector<double>& angles) {
  const auto q = build_qn(angles).centers;
  std::vector<Vec2> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[sigma(static_cast<int>(i) + 1) - 1] = q[i];
  return out;
}

inline int numeric_degree_oracle(const OrderedForest& g, const Permutation& sigma, int grid) {
  if (sigma.n() != g.n() || static_cast<int>(g.edge_count()) != g.n() - 1) {
    throw std::invalid_argument("numeric_degree_oracle: need an (n-1)-edge forest and matching sigma");
  }
  return family_degree([&](const std::vector<double>& x) { return permuted_qn(sigma, x); }, g, grid);
}

inline int numeric_degree_oracle_hhat(const OrderedForest& g, int a, int b, int grid) {
  return family_degree(
      [&](const std::vector<double>& x) { return build_hhat(a, b, x[0], x[1]).centers; }, g, grid);
}

/// Smallest grid that passes the continuity checks for q_n.
inline int default_qn_grid(int n) { return n <= 3 ? 16 : 24; }

}  // namespace confspace
