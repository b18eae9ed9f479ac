#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <string>
#include <vector>

#include "curvesing/errors.hpp"

namespace curvesing {

/// Dense row-major matrix over an exact field.
template <class K>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}
  DenseMatrix(std::initializer_list<std::initializer_list<K>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InputError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  K& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<K> row(std::size_t r) const {
    return std::vector<K>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  void append_row(const std::vector<K>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw InputError("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix dimension mismatch");
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
    return c;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> data_;
};

/// In-place reduced row echelon form; returns the pivot columns.
template <class K>
std::vector<std::size_t> rref(DenseMatrix<K>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    }
    K inv = K(1) / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      K factor = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m.at(r, j).is_zero()) m.at(i, j) -= factor * m.at(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
std::size_t rank(DenseMatrix<K> m) {
  return rref(m).size();
}

/// Basis of the right kernel {v : m v = 0}.
template <class K>
std::vector<std::vector<K>> kernel(DenseMatrix<K> m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(m.cols(), K(0));
    v[free] = K(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
K determinant(DenseMatrix<K> m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  K det(1);
  std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m.at(p, c).is_zero()) ++p;
    if (p == n) return K(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    K inv = K(1) / m.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m.at(i, c).is_zero()) continue;
      K factor = m.at(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m.at(i, j) -= factor * m.at(c, j);
    }
  }
  return det;
}

template <class K>
DenseMatrix<K> inverse(const DenseMatrix<K>& m) {
  std::size_t n = m.rows();
  if (n != m.cols()) throw InputError("inverse of a non-square matrix");
  DenseMatrix<K> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = K(1);
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw MathError("singular matrix");
  DenseMatrix<K> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  }
  return inv;
}

}  // namespace curvesing
