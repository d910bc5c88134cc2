#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "equibasis/errors.hpp"
#include "equibasis/gauss_basis.hpp"
#include "equibasis/linalg.hpp"
#include "equibasis/matrix.hpp"
#include "equibasis/precision.hpp"

namespace equibasis {

/// Accepted deviation of a state's norm from 1.
inline constexpr double state_norm_tolerance = 1e-10;

/// Schmidt coefficients below this are treated as exact zeros inside logarithms.
inline constexpr double spectrum_floor = 1e-15;

/// Schmidt coefficients, descending, summing to one.
struct SchmidtSpectrum {
  std::vector<double> lambda;
  [[nodiscard]] std::size_t dim() const noexcept { return lambda.size(); }
};

/// Squared singular values of Omega, renormalized so they sum to exactly one
/// (up to the final rounding). Works for rectangular cut matrices too.
inline SchmidtSpectrum schmidt_spectrum(const ComplexMatrix& omega) {
  const double norm = frobenius_norm(omega);
  if (!(std::abs(norm - 1.0) <= state_norm_tolerance)) {
    throw contract_error("schmidt_spectrum: state norm " + std::to_string(norm) + " is not 1");
  }
  SchmidtSpectrum spectrum;
  for (double s : singular_values(omega)) spectrum.lambda.push_back(s * s);
  const double total = std::accumulate(spectrum.lambda.begin(), spectrum.lambda.end(), 0.0);
  for (auto& l : spectrum.lambda) l /= total;
  return spectrum;
}

/// -sum lambda log_base lambda, with 0 log 0 = 0.
inline double entropy(const SchmidtSpectrum& spectrum, double base) {
  if (!(base > 1.0)) throw contract_error("entropy: logarithm base must exceed 1");
  double sum = 0.0;
  for (double l : spectrum.lambda)
    if (l > spectrum_floor) sum -= l * std::log(l);
  return std::max(0.0, sum / std::log(base));
}

/// Entropy of entanglement in base D = spectrum size; 1 for a maximally entangled state.
inline double entropy_of_entanglement(const SchmidtSpectrum& spectrum) {
  if (spectrum.dim() < 2) return 0.0;
  return std::min(1.0, entropy(spectrum, static_cast<double>(spectrum.dim())));
}

/// max_k |a_k - b_k| between two spectra of equal size.
inline double spectrum_distance(const SchmidtSpectrum& a, const SchmidtSpectrum& b) {
  if (a.dim() != b.dim()) throw shape_error("spectrum_distance: size mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a.lambda[i] - b.lambda[i]));
  return worst;
}

/// G-concurrence D |det Omega|^{2/D}, evaluated as D exp((2/D) log|det Omega|)
/// with the log taken from LU pivots so large-D determinants do not underflow.
template <typename T>
double g_concurrence_numeric(const Matrix<T>& omega) {
  using std::exp;
  if (!omega.is_square()) throw shape_error("g_concurrence_numeric: Omega must be square");
  const auto lu = lu_determinant(omega);
  if (lu.singular) return 0.0;
  const auto D = static_cast<double>(omega.rows());
  const real_of_t<T> scaled = exp(real_of_t<T>(2.0 / D) * lu.log_abs);
  return D * static_cast<double>(scaled);
}

/// log of the graph-family G-concurrence
///   C_G(t) = (2^{D-1} / D) prod_{r=1}^{D-1} [sin^2(pi r t / D)]^{(D-r)/D}.
/// Returns -inf at t = 0 (D >= 2).
inline double log_g_concurrence_closed_form(std::size_t D, double t) {
  detail::require_dimension(D, "log_g_concurrence_closed_form");
  detail::require_unit_interval(t, "log_g_concurrence_closed_form");
  const auto d = static_cast<long double>(D);
  long double sum = (d - 1.0L) * std::numbers::ln2_v<long double> - std::log(d);
  for (std::size_t r = 1; r < D; ++r) {
    const long double s = std::sin(std::numbers::pi_v<long double> * static_cast<long double>(r) * t / d);
    if (s == 0.0L) return -std::numeric_limits<double>::infinity();
    sum += (d - static_cast<long double>(r)) / d * std::log(s * s);
  }
  return static_cast<double>(sum);
}

inline double g_concurrence_closed_form(std::size_t D, double t) {
  return std::exp(log_g_concurrence_closed_form(D, t));
}

/// d/dt log C_G(t) = (2 pi / D^2) sum_{r=1}^{D-1} r (D - r) cot(pi r t / D).
/// Accumulated in long double: the terms near r = 1 and r = D - 1 are large
/// and of opposite sign at t = 1.
inline double log_cg_derivative(std::size_t D, double t) {
  detail::require_dimension(D, "log_cg_derivative");
  detail::require_unit_interval(t, "log_cg_derivative");
  if (t == 0.0) throw contract_error("log_cg_derivative: pole at t = 0");
  const auto d = static_cast<long double>(D);
  long double sum = 0.0L;
  for (std::size_t r = 1; r < D; ++r) {
    const auto rr = static_cast<long double>(r);
    const long double angle = std::numbers::pi_v<long double> * rr * t / d;
    sum += rr * (d - rr) * std::cos(angle) / std::sin(angle);
  }
  return static_cast<double>(2.0L * std::numbers::pi_v<long double> / (d * d) * sum);
}

/// sum_{r=1}^{D-1} r (D - r) cot(pi r / D): the bracket of the t = 1 derivative, which vanishes.
inline double cot_weight_sum(std::size_t D) {
  detail::require_dimension(D, "cot_weight_sum");
  const auto d = static_cast<long double>(D);
  long double sum = 0.0L;
  for (std::size_t r = 1; r < D; ++r) {
    const auto rr = static_cast<long double>(r);
    const long double angle = std::numbers::pi_v<long double> * rr / d;
    sum += rr * (d - rr) * std::cos(angle) / std::sin(angle);
  }
  return static_cast<double>(sum);
}

}  // namespace equibasis
