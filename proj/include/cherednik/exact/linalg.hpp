// Copyright 2026 The cherednik-verify Authors
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

#ifndef CHEREDNIK_EXACT_LINALG_HPP
#define CHEREDNIK_EXACT_LINALG_HPP

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cherednik/errors.hpp"
#include "cherednik/exact/cyclotomic.hpp"
#include "cherednik/exact/param_scalar.hpp"

namespace cherednik::exact {

// Rough size of a field element; elimination prefers cheap pivots to slow
// down coefficient growth.
inline std::size_t pivot_cost(const Cyclotomic& v) { return v.is_rational() ? 1 : v.coefficients().size() + 1; }
inline std::size_t pivot_cost(const ParamScalar& v) {
  return v.numerator().size() * 4 + (v.is_polynomial() ? 0 : 16 + v.denominator().size() * 4);
}

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1L);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<F> row(std::size_t r) const {
    return std::vector<F>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (v.size() != cols_) throw InvalidInput("matrix-vector shape mismatch");
    std::vector<F> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        if (!(*this)(i, k).is_zero() && !v[k].is_zero()) out[i] += (*this)(i, k) * v[k];
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      if (!(a.data_[i] == b.data_[i])) return false;
    }
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

template <class F>
struct RowEchelon {
  Matrix<F> reduced;                     // reduced row echelon form
  std::vector<std::size_t> pivot_cols;   // one per nonzero row
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <class F>
RowEchelon<F> row_reduce(Matrix<F> m) {
  RowEchelon<F> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      const std::size_t cost = pivot_cost(m(r, col));
      if (cost < best_cost) {
        best = r;
        best_cost = cost;
      }
    }
    if (best == m.rows()) continue;
    if (best != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(best, c), m(row, c));
    }
    const F inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (!m(row, c).is_zero()) m(row, c) = m(row, c) * inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const F factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return row_reduce(m).rank();
}

/// Basis of {v : m v = 0}.
template <class F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& m) {
  const auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols());
    v[free] = F(1L);
    for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) {
      const F& entry = ech.reduced(i, free);
      if (!entry.is_zero()) v[ech.pivot_cols[i]] = -entry;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Inverse of a square matrix, or nullopt when singular.
template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw InvalidInput("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1L);
  }
  const auto ech = row_reduce(std::move(aug));
  if (ech.rank() < n || ech.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Matrix<F> out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = ech.reduced(i, n + j);
  }
  return out;
}

/// Sparse vectors keyed by an ordered basis label; the span is kept in
/// echelon form with pivots at the largest key of each vector.
template <class Key, class F>
class SpanBuilder {
 public:
  using Vector = std::map<Key, F>;

  /// Adds v to the span. Returns true if v was independent of what is
  /// already there.
  bool insert(Vector v) {
    reduce(v);
    if (v.empty()) return false;
    auto lead = std::prev(v.end());
    const F inv = lead->second.inverse();
    for (auto& [k, c] : v) c = c * inv;
    const Key key = lead->first;
    pivots_.emplace(key, std::move(v));
    return true;
  }

  /// True if v lies in the span.
  bool contains(Vector v) const {
    reduce(v);
    return v.empty();
  }

  std::size_t rank() const noexcept { return pivots_.size(); }
  const std::map<Key, Vector>& pivots() const noexcept { return pivots_; }

 private:
  void reduce(Vector& v) const {
    for (auto it = v.begin(); it != v.end();) {
      it->second.is_zero() ? it = v.erase(it) : ++it;
    }
    while (!v.empty()) {
      auto lead = std::prev(v.end());
      auto pivot = pivots_.find(lead->first);
      if (pivot == pivots_.end()) return;
      const F factor = lead->second;
      for (const auto& [k, c] : pivot->second) {
        auto [slot, inserted] = v.try_emplace(k, F());
        slot->second -= factor * c;
        if (slot->second.is_zero()) v.erase(slot);
      }
    }
  }

  std::map<Key, Vector> pivots_;
};

}  // namespace cherednik::exact

#endif  // CHEREDNIK_EXACT_LINALG_HPP
