#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace absinc {

/// Solve sum_j x_j * cols[j] = rhs over an exact field by Gauss-Jordan
/// elimination. Each column has length rhs.size(). Returns one solution
/// (free variables set to zero) or nullopt when inconsistent.
template <class F>
std::optional<std::vector<typename F::Value>> solve_columns(
    const F& f, const std::vector<std::vector<typename F::Value>>& cols,
    const std::vector<typename F::Value>& rhs) {
  using V = typename F::Value;
  const std::size_t n = cols.size();
  const std::size_t m = rhs.size();

  std::vector<std::vector<V>> a;
  a.reserve(m);
  for (std::size_t r = 0; r < m; ++r) {
    std::vector<V> row;
    row.reserve(n + 1);
    for (std::size_t c = 0; c < n; ++c) row.push_back(cols[c][r]);
    row.push_back(rhs[r]);
    a.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t pr = row;
    while (pr < m && f.is_zero(a[pr][col])) ++pr;
    if (pr == m) continue;
    std::swap(a[pr], a[row]);
    V inv = f.div(f.one(), a[row][col]);
    for (std::size_t c = col; c <= n; ++c) a[row][c] = f.mul(a[row][c], inv);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || f.is_zero(a[r][col])) continue;
      V factor = a[r][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] = f.sub(a[r][c], f.mul(factor, a[row][c]));
    }
    pivot_cols.push_back(col);
    ++row;
  }

  for (std::size_t r = row; r < m; ++r)
    if (!f.is_zero(a[r][n])) return std::nullopt;

  std::vector<V> x(n, f.zero());
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = a[i][n];
  return x;
}

/// Rank of the column family over an exact field.
template <class F>
std::size_t column_rank(const F& f, const std::vector<std::vector<typename F::Value>>& cols) {
  using V = typename F::Value;
  if (cols.empty()) return 0;
  const std::size_t m = cols[0].size();
  const std::size_t n = cols.size();
  std::vector<std::vector<V>> a;
  a.reserve(m);
  for (std::size_t r = 0; r < m; ++r) {
    std::vector<V> row;
    row.reserve(n);
    for (std::size_t c = 0; c < n; ++c) row.push_back(cols[c][r]);
    a.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t pr = rank;
    while (pr < m && f.is_zero(a[pr][col])) ++pr;
    if (pr == m) continue;
    std::swap(a[pr], a[rank]);
    V inv = f.div(f.one(), a[rank][col]);
    for (std::size_t c = col; c < n; ++c) a[rank][c] = f.mul(a[rank][c], inv);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == rank || f.is_zero(a[r][col])) continue;
      V factor = a[r][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] = f.sub(a[r][c], f.mul(factor, a[rank][c]));
    }
    ++rank;
  }
  return rank;
}

/// True when the square matrix with the given columns is invertible.
template <class F>
bool columns_invertible(const F& f, const std::vector<std::vector<typename F::Value>>& cols) {
  if (cols.empty()) return false;
  if (cols.size() != cols[0].size()) return false;
  return column_rank(f, cols) == cols.size();
}

}  // namespace absinc
