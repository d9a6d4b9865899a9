// Copyright 2026 The chaingeo Authors.
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
#include <string>
#include <utility>
#include <vector>

#include "chaingeo/error.hpp"

namespace chaingeo {

// Exact linear algebra over any field type F providing + - * /, is_zero(),
// == and the free functions zero_like / one_like. Vectors are rows; a
// subspace is stored as the row space of a matrix in reduced row-echelon
// form, which is its unique canonical representative.

template <class F>
using Vec = std::vector<F>;

template <class F>
class Matrix {
 public:
  Matrix() = default;
  /// Empty matrix with `cols` columns; `zero` fixes the field instance.
  Matrix(std::size_t cols, F zero) : cols_(cols), zero_(std::move(zero)) {}
  Matrix(std::vector<Vec<F>> rows, std::size_t cols, F zero)
      : cols_(cols), zero_(std::move(zero)), rows_(std::move(rows)) {
    for (const auto& r : rows_) {
      if (r.size() != cols_) raise(Errc::DimensionError, "row length differs from column count");
    }
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const F& zero() const { return zero_; }
  F one() const { return one_like(zero_); }

  const Vec<F>& row(std::size_t r) const { return rows_[r]; }
  Vec<F>& row(std::size_t r) { return rows_[r]; }
  const std::vector<Vec<F>>& row_list() const { return rows_; }
  const F& operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  F& operator()(std::size_t r, std::size_t c) { return rows_[r][c]; }

  void push_row(Vec<F> v) {
    if (v.size() != cols_) raise(Errc::DimensionError, "row length differs from column count");
    rows_.push_back(std::move(v));
  }

  Vec<F> zero_vector() const { return Vec<F>(cols_, zero_); }

  bool operator==(const Matrix& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }

 private:
  std::size_t cols_ = 0;
  F zero_{};
  std::vector<Vec<F>> rows_;
};

/// Reduces `m` to RREF (pivots equal to one), drops zero rows and returns the
/// pivot columns.
template <class F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t sel = lead_row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    std::swap(m.row(sel), m.row(lead_row));
    Vec<F>& pivot_row = m.row(lead_row);
    if (!(pivot_row[col] == m.one())) {
      const F scale = m.one() / pivot_row[col];
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!pivot_row[c].is_zero()) pivot_row[c] = pivot_row[c] * scale;
      }
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col).is_zero()) continue;
      const F factor = m(r, col);
      Vec<F>& target = m.row(r);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!pivot_row[c].is_zero()) target[c] = target[c] - factor * pivot_row[c];
      }
    }
    pivots.push_back(col);
    ++lead_row;
  }
  Matrix<F> trimmed(m.cols(), m.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) trimmed.push_row(std::move(m.row(r)));
  m = std::move(trimmed);
  return pivots;
}

template <class F>
Matrix<F> row_space(Matrix<F> m) {
  rref_in_place(m);
  return m;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref_in_place(m).size();
}

/// Basis (as rows, in RREF) of {y : m y^T = 0}.
template <class F>
Matrix<F> kernel(Matrix<F> m) {
  const std::vector<std::size_t> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  Matrix<F> out(m.cols(), m.zero());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> y = m.zero_vector();
    y[free] = m.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) y[pivots[r]] = -m(r, free);
    out.push_row(std::move(y));
  }
  return row_space(std::move(out));
}

template <class F>
Matrix<F> join(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> m = a;
  for (const auto& r : b.row_list()) m.push_row(r);
  return row_space(std::move(m));
}

template <class F>
Matrix<F> intersect(const Matrix<F>& a, const Matrix<F>& b) {
  // U ∩ W = (U^perp + W^perp)^perp
  return kernel(join(kernel(a), kernel(b)));
}

template <class F>
Matrix<F> span_of(const std::vector<Vec<F>>& vectors, std::size_t cols, const F& zero) {
  return row_space(Matrix<F>(vectors, cols, zero));
}

template <class F>
bool in_span(const Matrix<F>& basis, const Vec<F>& v) {
  Matrix<F> m = basis;
  m.push_row(v);
  return rank(m) == rank(basis);
}

/// Subspace containment U ⊆ W.
template <class F>
bool contains(const Matrix<F>& outer, const Matrix<F>& inner) {
  return rank(join(outer, inner)) == rank(outer);
}

template <class F>
F dot(const Vec<F>& x, const Vec<F>& y) {
  F s = zero_like(x.at(0));
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!x[k].is_zero() && !y[k].is_zero()) s = s + x[k] * y[k];
  }
  return s;
}

/// Coefficients c with v = sum c_k basis_k; basis rows must be independent.
template <class F>
std::optional<Vec<F>> coordinates_in(const Matrix<F>& basis, const Vec<F>& v) {
  // Solve c B = v as B^T c^T = v^T via RREF of the augmented transpose.
  const std::size_t n = basis.rows();
  Matrix<F> aug(n + 1, basis.zero());
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    Vec<F> r(n + 1, basis.zero());
    for (std::size_t k = 0; k < n; ++k) r[k] = basis(k, c);
    r[n] = v[c];
    aug.push_row(std::move(r));
  }
  const std::vector<std::size_t> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  if (pivots.size() != n) raise(Errc::DimensionError, "basis rows are dependent");
  Vec<F> coeffs(n, basis.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) coeffs[pivots[r]] = aug(r, n);
  return coeffs;
}

/// Product a b.
template <class F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) raise(Errc::DimensionError, "matrix shapes do not compose");
  Matrix<F> out(b.cols(), a.zero());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vec<F> row = out.zero_vector();
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (!b(k, c).is_zero()) row[c] = row[c] + a(r, k) * b(k, c);
      }
    }
    out.push_row(std::move(row));
  }
  return out;
}

/// Inverse of a square matrix; DimensionError if it is singular.
template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) raise(Errc::DimensionError, "inverse of a non-square matrix");
  Matrix<F> aug(2 * n, m.zero());
  for (std::size_t r = 0; r < n; ++r) {
    Vec<F> row(2 * n, m.zero());
    for (std::size_t c = 0; c < n; ++c) row[c] = m(r, c);
    row[n + r] = m.one();
    aug.push_row(std::move(row));
  }
  const std::vector<std::size_t> pivots = rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) raise(Errc::DimensionError, "matrix is singular");
  Matrix<F> out(n, m.zero());
  for (std::size_t r = 0; r < n; ++r) out.push_row(Vec<F>(aug.row(r).begin() + n, aug.row(r).end()));
  return out;
}

/// Scales a nonzero vector so that its first nonzero entry is one.
template <class F>
Vec<F> normalize_first_nonzero(Vec<F> v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    const F s = one_like(v[k]) / v[k];
    for (std::size_t j = k; j < v.size(); ++j) {
      if (!v[j].is_zero()) v[j] = v[j] * s;
    }
    return v;
  }
  raise(Errc::DimensionError, "zero vector has no projective representative");
}

template <class F>
bool is_zero_vector(const Vec<F>& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

template <class F>
std::string vec_str(const Vec<F>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ',';
    s += v[k].str();
  }
  return s;
}

/// Row-wise text: entries separated by ',', rows by ';'.
template <class F>
std::string matrix_str(const Matrix<F>& m) {
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += ';';
    s += vec_str(m.row(r));
  }
  return s;
}

}  // namespace chaingeo
