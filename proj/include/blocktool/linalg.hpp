// Copyright 2026 The blocktool Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

// Dense Gaussian elimination over any exact field supplied as an operations
// object (`F::Elem`, zero/one/add/sub/mul/neg/inv/is_zero/equal).
namespace blocktool::linalg {

template <class F>
struct Matrix {
  using Elem = typename F::Elem;
  std::size_t rows = 0, cols = 0;
  std::vector<Elem> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const Elem& fill) : rows(r), cols(c), data(r * c, fill) {}
  Elem& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

template <class F>
Matrix<F> zeros(const F& f, std::size_t r, std::size_t c) {
  return Matrix<F>(r, c, f.zero());
}

template <class F>
Matrix<F> identity(const F& f, std::size_t n) {
  Matrix<F> m(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

template <class F>
Matrix<F> multiply(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> c(a.rows, b.cols, f.zero());
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) = f.add(c(i, j), f.mul(a(i, k), b(k, j)));
    }
  return c;
}

/// In-place reduced row echelon form; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(const F& f, Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && f.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(row, j));
    auto piv_inv = f.inv(m(row, col));
    for (std::size_t j = col; j < m.cols; ++j) m(row, j) = f.mul(m(row, j), piv_inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || f.is_zero(m(i, col))) continue;
      auto factor = m(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t rank(const F& f, Matrix<F> m) {
  return rref(f, m).size();
}

/// Basis of {x : m x = 0}, one column vector per entry.
template <class F>
std::vector<std::vector<typename F::Elem>> nullspace(const F& f, Matrix<F> m) {
  auto pivots = rref(f, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Elem> v(m.cols, f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves m x = rhs; nullopt if inconsistent. Returns one solution (free
/// variables zero).
template <class F>
std::optional<std::vector<typename F::Elem>> solve(const F& f, const Matrix<F>& m,
                                                   const std::vector<typename F::Elem>& rhs) {
  Matrix<F> aug(m.rows, m.cols + 1, f.zero());
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols) = rhs[i];
  }
  auto pivots = rref(f, aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  std::vector<typename F::Elem> x(m.cols, f.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols);
  return x;
}

/// Inverse of a square matrix, or nullopt if singular.
template <class F>
std::optional<Matrix<F>> inverse(const F& f, const Matrix<F>& m) {
  const std::size_t n = m.rows;
  Matrix<F> aug(n, 2 * n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  auto pivots = rref(f, aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix<F> out(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

}  // namespace blocktool::linalg
