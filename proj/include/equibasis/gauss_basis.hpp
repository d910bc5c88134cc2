#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "equibasis/errors.hpp"
#include "equibasis/matrix.hpp"

namespace equibasis {

enum class Construction { gauss, graph };

/// One member of an interpolating family: dimension D, parameter t in [0, 1].
struct BasisFamilySpec {
  std::size_t D = 2;
  double t = 0.0;
  Construction construction = Construction::gauss;
};

/// Real phases theta_j, j = 0..D-1 (radians, unreduced).
struct PhaseVector {
  std::vector<double> theta;
  [[nodiscard]] std::size_t dim() const noexcept { return theta.size(); }
};

/// Schmidt-vector amplitudes a_k, k = 0..D-1.
struct CoefficientVector {
  std::vector<complex> a;
  [[nodiscard]] std::size_t dim() const noexcept { return a.size(); }
  [[nodiscard]] double norm_squared() const {
    double s = 0.0;
    for (const auto& x : a) s += std::norm(x);
    return s;
  }
};

namespace detail {

inline void require_unit_interval(double t, const char* who) {
  if (!std::isfinite(t)) throw contract_error(std::string(who) + ": t must be finite");
  if (t < 0.0 || t > 1.0) throw contract_error(std::string(who) + ": t=" + std::to_string(t) + " outside [0, 1]");
}

inline void require_dimension(std::size_t D, const char* who) {
  if (D < 1) throw contract_error(std::string(who) + ": dimension must be >= 1");
}

inline void require_index(std::size_t index, std::size_t D, const char* who) {
  if (index >= D) {
    throw contract_error(std::string(who) + ": index " + std::to_string(index) + " outside [0, " +
                         std::to_string(D - 1) + "]");
  }
}

}  // namespace detail

/// theta_j = pi j^2 / D for even D, 2 pi j^2 / D for odd D.
///
/// The phases are kept unreduced (8pi/3 stays 8pi/3 at D = 3): a_k(t) uses
/// exp(i t theta_j), so reducing modulo 2pi would change the family for t < 1.
inline PhaseVector theorem1_phases(std::size_t D) {
  detail::require_dimension(D, "theorem1_phases");
  const double scale = (D % 2 == 0 ? 1.0 : 2.0) * std::numbers::pi / static_cast<double>(D);
  PhaseVector out;
  out.theta.resize(D);
  for (std::size_t j = 0; j < D; ++j) out.theta[j] = scale * static_cast<double>(j * j);
  return out;
}

/// a_k(t) = (1/D) sum_j exp(i t theta_j) omega^{kj}, omega = exp(2 pi i / D).
inline CoefficientVector amplitudes(const PhaseVector& phases, double t) {
  detail::require_unit_interval(t, "amplitudes");
  const std::size_t D = phases.dim();
  detail::require_dimension(D, "amplitudes");
  const double step = 2.0 * std::numbers::pi / static_cast<double>(D);
  CoefficientVector out;
  out.a.assign(D, complex{});
  for (std::size_t k = 0; k < D; ++k) {
    complex sum{};
    for (std::size_t j = 0; j < D; ++j) {
      const double angle = t * phases.theta[j] + step * static_cast<double>((k * j) % D);
      sum += complex(std::cos(angle), std::sin(angle));
    }
    out.a[k] = sum / static_cast<double>(D);
  }
  return out;
}

/// max_m | sum_k conj(a_k) a_{k+m mod D} - delta_{m0} |, i.e. how far the D^2
/// shifted states built from `a` are from orthonormal.
inline double orthonormality_residual(const CoefficientVector& coeffs) {
  const std::size_t D = coeffs.dim();
  double worst = 0.0;
  for (std::size_t m = 0; m < D; ++m) {
    complex overlap{};
    for (std::size_t k = 0; k < D; ++k) overlap += std::conj(coeffs.a[k]) * coeffs.a[(k + m) % D];
    if (m == 0) overlap -= 1.0;
    worst = std::max(worst, std::abs(overlap));
  }
  return worst;
}

/// Omega of sum_k a_k |k+m>|k+m+n> (indices mod D).
inline BipartiteStateMatrix basis_state(const CoefficientVector& coeffs, std::size_t m, std::size_t n) {
  const std::size_t D = coeffs.dim();
  detail::require_dimension(D, "basis_state");
  detail::require_index(m, D, "basis_state");
  detail::require_index(n, D, "basis_state");
  BipartiteStateMatrix omega(D, D);
  for (std::size_t k = 0; k < D; ++k) omega((k + m) % D, (k + m + n) % D) = coeffs.a[k];
  return omega;
}

/// All D^2 states of the Gauss-sum family, ordered by (m, n) with n fastest.
inline std::vector<BipartiteStateMatrix> gauss_family(const BasisFamilySpec& spec) {
  if (spec.construction != Construction::gauss) throw contract_error("gauss_family: construction must be gauss");
  const CoefficientVector coeffs = amplitudes(theorem1_phases(spec.D), spec.t);
  std::vector<BipartiteStateMatrix> states;
  states.reserve(spec.D * spec.D);
  for (std::size_t m = 0; m < spec.D; ++m)
    for (std::size_t n = 0; n < spec.D; ++n) states.push_back(basis_state(coeffs, m, n));
  return states;
}

}  // namespace equibasis
