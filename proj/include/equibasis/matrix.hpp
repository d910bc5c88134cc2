#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "equibasis/errors.hpp"

namespace equibasis {

/// Dense row-major matrix. The scalar is a template parameter so the same
/// elimination code runs in double and in extended precision.
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), entries_(checked_size(rows, cols), fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> init)
      : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
    entries_.reserve(checked_size(rows_, cols_));
    for (const auto& row : init) {
      if (row.size() != cols_) throw shape_error("Matrix: ragged initializer");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T{1};
    return out;
  }

  static Matrix diagonal(std::span<const T> values) {
    Matrix out(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out(i, i) = values[i];
    return out;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  [[nodiscard]] std::span<T> data() noexcept { return entries_; }
  [[nodiscard]] std::span<const T> data() const noexcept { return entries_; }

  Matrix& operator*=(const T& scale) {
    for (auto& e : entries_) e *= scale;
    return *this;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  static std::size_t checked_size(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw shape_error("Matrix: rows and cols must be >= 1");
    return rows * cols;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> entries_;
};

using complex = std::complex<double>;
using ComplexMatrix = Matrix<complex>;
using ComplexVector = std::vector<complex>;

/// Coefficient matrix Omega of a pure bipartite state sum_{jk} Omega_jk |j>|k>.
/// Row index is the first subsystem, column index the second.
using BipartiteStateMatrix = ComplexMatrix;

template <typename T>
Matrix<T> operator*(Matrix<T> m, const T& scale) {
  m *= scale;
  return m;
}

/// Frobenius norm, i.e. the Euclidean norm of the vectorized state.
inline double frobenius_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (const auto& e : m.data()) sum += std::norm(e);
  return std::sqrt(sum);
}

/// Largest entrywise modulus of a - b.
inline double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw shape_error("max_abs_difference: shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

}  // namespace equibasis
