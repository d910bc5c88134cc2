#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "equibasis/errors.hpp"
#include "equibasis/matrix.hpp"
#include "equibasis/precision.hpp"

namespace equibasis {

/// Entrywise tolerance on |A - A^dagger| accepted by hermitian_eigenvalues.
inline constexpr double hermitian_tolerance = 1e-10;

template <typename T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw shape_error("matmul: a.cols (" + std::to_string(a.cols()) + ") != b.rows (" +
                      std::to_string(b.rows()) + ")");
  }
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

template <typename T>
Matrix<T> conj_transpose(const Matrix<T>& a) {
  using std::conj;
  Matrix<T> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = conj(a(i, j));
  return out;
}

inline void require_finite(const ComplexMatrix& a, const char* who) {
  for (const auto& e : a.data()) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
      throw numeric_error(std::string(who) + ": non-finite matrix entry");
    }
  }
}

/// Result of partial-pivot LU: product of pivots split into sign and log-magnitude
/// so that determinants far below the double range stay usable.
template <typename T>
struct LuDeterminant {
  T phase{1};                      // det / |det|, or 0 when singular
  real_of_t<T> log_abs{0};         // log|det|, -inf when singular
  bool singular = false;

  [[nodiscard]] T value() const {
    using std::exp;
    if (singular) return T{0};
    return phase * T(exp(log_abs));
  }
};

template <typename T>
LuDeterminant<T> lu_determinant(Matrix<T> a) {
  using std::abs;
  using std::log;
  using Real = real_of_t<T>;
  if (!a.is_square()) throw shape_error("determinant: matrix must be square");
  const std::size_t n = a.rows();
  LuDeterminant<T> result;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    Real best = abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      Real candidate = abs(a(r, col));
      if (candidate > best) {
        best = candidate;
        pivot = r;
      }
    }
    if (best == Real(0)) {
      result.singular = true;
      result.phase = T{0};
      result.log_abs = -std::numeric_limits<double>::infinity();
      return result;
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      result.phase = -result.phase;
    }
    const T diag = a(col, col);
    result.phase *= diag / T(best);
    result.log_abs += log(best);
    for (std::size_t r = col + 1; r < n; ++r) {
      const T factor = a(r, col) / diag;
      if (factor == T{0}) continue;
      for (std::size_t c = col + 1; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return result;
}

/// Inverse by Gauss-Jordan elimination with partial pivoting; numeric_error if singular.
template <typename T>
Matrix<T> lu_inverse(Matrix<T> a) {
  using std::abs;
  using Real = real_of_t<T>;
  if (!a.is_square()) throw shape_error("inverse: matrix must be square");
  const std::size_t n = a.rows();
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    Real best = abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      Real candidate = abs(a(r, col));
      if (candidate > best) {
        best = candidate;
        pivot = r;
      }
    }
    if (best == Real(0)) throw numeric_error("inverse: matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const T scale = T(1) / a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const T factor = a(r, col);
      if (factor == T{0}) continue;
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= factor * a(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

inline complex determinant(const ComplexMatrix& a) {
  require_finite(a, "determinant");
  return lu_determinant(a).value();
}

/// log|det a| accumulated from the LU pivots; -inf for an exactly singular input.
template <typename T>
real_of_t<T> log_abs_determinant(const Matrix<T>& a) {
  if constexpr (std::is_same_v<T, complex>) require_finite(a, "log_abs_determinant");
  return lu_determinant(a).log_abs;
}

namespace detail {

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& a) {
  return Eigen::Map<const Eigen::Matrix<complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      a.data().data(), static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
}

}  // namespace detail

/// Singular values in descending order; length min(rows, cols).
inline std::vector<double> singular_values(const ComplexMatrix& a) {
  require_finite(a, "singular_values");
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(detail::to_eigen(a));
  const auto& s = svd.singularValues();
  std::vector<double> out(s.data(), s.data() + s.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Eigenvalues of a Hermitian matrix, descending.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  require_finite(a, "hermitian_eigenvalues");
  if (!a.is_square()) throw shape_error("hermitian_eigenvalues: matrix must be square");
  const double asym = max_abs_difference(a, conj_transpose(a));
  if (asym > hermitian_tolerance) {
    throw contract_error("hermitian_eigenvalues: matrix is not Hermitian (max |A - A^dagger| = " +
                         std::to_string(asym) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(detail::to_eigen(a), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace equibasis
