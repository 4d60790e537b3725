#pragma once

#include <cstddef>
#include <vector>

#include "pbf/errors.hpp"
#include "pbf/scalar.hpp"

namespace pbf {

/// Minimal dense row-major matrix over the scalar backend.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix submatrix(const std::vector<std::size_t>& row_set,
                   const std::vector<std::size_t>& col_set) const {
    Matrix out(row_set.size(), col_set.size());
    for (std::size_t i = 0; i < row_set.size(); ++i)
      for (std::size_t j = 0; j < col_set.size(); ++j)
        out(i, j) = (*this)(row_set[i], col_set[j]);
    return out;
  }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw index_out_of_range("matrix product shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k) == S(0)) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<S> data_;
};

/// Largest relative entrywise deviation, with |b| as reference scale.
template <class S>
S max_relative_difference(const Matrix<S>& a, const Matrix<S>& b) {
  S worst(0);
  S scale(0);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      S mag = scalar_abs(b(i, j));
      if (mag > scale) scale = mag;
    }
  if (scale == S(0)) scale = S(1);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      S diff = scalar_abs(S(a(i, j) - b(i, j))) / scale;
      if (diff > worst) worst = diff;
    }
  return worst;
}

}  // namespace pbf
