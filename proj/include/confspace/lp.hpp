#pragma once
// Phase-one simplex: find x >= 0 with A x = b, or report infeasibility.
// Dense tableau with Bland's rule; meant for the small equilibrium systems.

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace confspace {

using DenseMatrix = std::vector<std::vector<double>>;

inline std::optional<std::vector<double>> nonnegative_solution(const DenseMatrix& A, const std::vector<double>& b,
                                                               double tol = 1e-10) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : 0;
  if (b.size() != m) throw std::invalid_argument("nonnegative_solution: dimension mismatch");
  if (m == 0) return std::vector<double>(n, 0.0);

  // Columns: n structural, m artificial, then rhs.
  const std::size_t cols = n + m;
  DenseMatrix T(m + 1, std::vector<double>(cols + 1, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double s = b[i] < 0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) T[i][j] = s * A[i][j];
    T[i][n + i] = 1.0;
    T[i][cols] = s * b[i];
    basis[i] = n + i;
  }
  // Objective row: minimise the sum of artificials (stored as reduced costs).
  for (std::size_t j = 0; j <= cols; ++j) {
    if (j >= n && j < cols) continue;
    double s = 0;
    for (std::size_t i = 0; i < m; ++i) s += T[i][j];
    T[m][j] = -s;
  }

  auto pivot = [&](std::size_t row, std::size_t col) {
    const double p = T[row][col];
    for (double& v : T[row]) v /= p;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == row || T[i][col] == 0) continue;
      const double f = T[i][col];
      for (std::size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[row][j];
    }
    basis[row] = col;
  };

  for (std::size_t iter = 0; iter < 50 * (cols + m) + 1000; ++iter) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (T[m][j] < -tol) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    double best = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= tol) continue;
      const double ratio = T[i][cols] / T[i][enter];
      if (leave == m || ratio < best - 1e-15 || (std::abs(ratio - best) <= 1e-15 && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase one
    pivot(leave, enter);
  }

  double infeas = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= n) infeas += std::abs(T[i][cols]);
  }
  if (infeas > 1e-8) return std::nullopt;

  std::vector<double> x(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] = std::max(0.0, T[i][cols]);
  }
  return x;
}

}  // namespace confspace
