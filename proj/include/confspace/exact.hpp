#pragma once
// Exact integer linear algebra: fraction-free (Bareiss) elimination for
// determinants and ranks, and rational Gauss-Jordan for solves.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace confspace {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntMatrix = std::vector<std::vector<std::int64_t>>;

namespace detail {

template <class Out, class In>
std::vector<std::vector<Out>> convert(const std::vector<std::vector<In>>& m) {
  std::vector<std::vector<Out>> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].reserve(m[i].size());
    for (const auto& v : m[i]) out[i].emplace_back(v);
  }
  return out;
}

// In-place Bareiss sweep. Returns the rank; `sign` tracks row swaps and
// `last_pivot` holds the final leading principal minor.
template <class Int>
std::size_t bareiss_sweep(std::vector<std::vector<Int>>& a, int& sign, Int& last_pivot) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  sign = 1;
  last_pivot = 1;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    last_pivot = prev;
    ++r;
  }
  return r;
}

}  // namespace detail

inline BigInt exact_determinant(const IntMatrix& m) {
  if (m.empty()) return BigInt(1);
  for (const auto& row : m) {
    if (row.size() != m.size()) throw std::invalid_argument("determinant of non-square matrix");
  }
  auto a = detail::convert<BigInt>(m);
  int sign = 1;
  BigInt pivot;
  const std::size_t rank = detail::bareiss_sweep(a, sign, pivot);
  if (rank < m.size()) return BigInt(0);
  return sign < 0 ? BigInt(-pivot) : pivot;
}

inline std::size_t exact_rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  auto a = detail::convert<BigInt>(m);
  int sign = 1;
  BigInt pivot;
  return detail::bareiss_sweep(a, sign, pivot);
}

/// Solves A x = b over the rationals for square nonsingular A.
inline std::vector<Rational> exact_solve(const IntMatrix& m, const std::vector<std::int64_t>& rhs) {
  const std::size_t n = m.size();
  if (rhs.size() != n) throw std::invalid_argument("exact_solve: dimension mismatch");
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("exact_solve: non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n] = rhs[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("exact_solve: singular matrix");
    std::swap(a[p], a[c]);
    const Rational inv = 1 / a[c][c];
    for (std::size_t j = c; j <= n; ++j) a[c][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

}  // namespace confspace
