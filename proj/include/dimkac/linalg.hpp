#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dimkac/poly.hpp"

namespace dimkac {

template <class F>
using Matrix = std::vector<std::vector<F>>;

/// Row echelon form in place; returns the pivot column of each pivot row.
/// Pivots are scaled to one and eliminated above as well (reduced form).
template <class F>
std::vector<std::size_t> rref(Matrix<F>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    const F inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const F f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> a) {
  return rref(a).size();
}

/// Determinant by Gaussian elimination over a field.
template <class F>
F determinant(Matrix<F> a, const F& one) {
  const std::size_t n = a.size();
  F det = one;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return one - one;
    if (piv != c) {
      std::swap(a[c], a[piv]);
      det = -det;
    }
    det *= a[c][c];
    const F inv = a[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      const F f = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

/// Basis of the right kernel {x : a x = 0}.
template <class F>
std::vector<std::vector<F>> kernel(Matrix<F> a, const F& zero, const F& one) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, zero);
    v[free] = one;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Fraction-free (Bareiss) determinant of a square polynomial matrix; every
/// division is exact.
Poly bareiss_determinant(Matrix<Poly> a);

}  // namespace dimkac
