#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>

#include "equibasis/errors.hpp"
#include "equibasis/matrix.hpp"

namespace equibasis {

/// Integer parameters of a (generalized) quadratic Gauss sum.
struct GaussSumParams {
  std::int64_t p = 1;
  std::int64_t m = 1;
  std::int64_t n = 0;  // linear coefficient, generalized sums only
};

namespace detail {

/// Above this many terms the accumulation switches to compensated summation.
inline constexpr std::int64_t compensated_threshold = 1000;

/// floor-mod for possibly negative numerators.
constexpr std::int64_t positive_mod(__int128 value, std::int64_t modulus) {
  auto r = static_cast<std::int64_t>(value % modulus);
  return r < 0 ? r + modulus : r;
}

/// exp(i*pi*num/den), with num reduced modulo 2*den in exact integer arithmetic
/// so the angle handed to sin/cos lies in [0, 2*pi).
inline complex pi_phase(__int128 num, std::int64_t den) {
  const std::int64_t reduced = positive_mod(num, 2 * den);
  const double angle = std::numbers::pi * static_cast<double>(reduced) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

/// Neumaier-compensated complex sum; plain summation when disabled.
class ComplexAccumulator {
 public:
  explicit ComplexAccumulator(bool compensated) : compensated_(compensated) {}

  void add(complex term) {
    if (!compensated_) {
      re_ += term.real();
      im_ += term.imag();
      return;
    }
    step(re_, re_carry_, term.real());
    step(im_, im_carry_, term.imag());
  }

  [[nodiscard]] complex total() const { return {re_ + re_carry_, im_ + im_carry_}; }

 private:
  static void step(double& sum, double& carry, double x) {
    const double t = sum + x;
    carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }

  bool compensated_;
  double re_ = 0.0, im_ = 0.0, re_carry_ = 0.0, im_carry_ = 0.0;
};

inline void validate_pm(const GaussSumParams& params, const char* who) {
  if (params.p < 1 || params.m < 1) {
    throw contract_error(std::string(who) + ": p and m must be positive (got p=" + std::to_string(params.p) +
                         ", m=" + std::to_string(params.m) + ")");
  }
}

/// sum_{j<count} exp(i*pi*(a*j^2 + b*j)/den)
inline complex half_angle_sum(std::int64_t count, std::int64_t a, std::int64_t b, std::int64_t den) {
  ComplexAccumulator acc(count > compensated_threshold);
  for (std::int64_t j = 0; j < count; ++j) {
    const __int128 jj = j;
    acc.add(pi_phase(jj * jj * a + jj * b, den));
  }
  return acc.total();
}

}  // namespace detail

/// sum_{j=0}^{p-1} exp(2 pi i j^2 m / p)
inline complex quadratic_gauss_sum(const GaussSumParams& params) {
  detail::validate_pm(params, "quadratic_gauss_sum");
  return detail::half_angle_sum(params.p, 2 * params.m, 0, params.p);
}

/// sum_{j=0}^{p-1} exp(2 pi i (j^2 m + j n) / p)
inline complex generalized_gauss_sum(const GaussSumParams& params) {
  detail::validate_pm(params, "generalized_gauss_sum");
  if (params.n < 0) throw contract_error("generalized_gauss_sum: n must be nonnegative");
  return detail::half_angle_sum(params.p, 2 * params.m, 2 * params.n, params.p);
}

/// |lhs - rhs| of the Landsberg-Schaar identity
///   p^{-1/2} sum_{j<p} e^{2 pi i j^2 m/p} = e^{i pi/4} (2m)^{-1/2} sum_{j<2m} e^{-i pi j^2 p/(2m)}.
inline double landsberg_schaar_residual(std::int64_t p, std::int64_t m) {
  detail::validate_pm({p, m, 0}, "landsberg_schaar_residual");
  const complex lhs = quadratic_gauss_sum({p, m, 0}) / std::sqrt(static_cast<double>(p));
  const complex rhs = detail::pi_phase(1, 4) / std::sqrt(2.0 * static_cast<double>(m)) *
                      detail::half_angle_sum(2 * m, -p, 0, 2 * m);
  return std::abs(lhs - rhs);
}

/// |lhs - rhs| of the reciprocity formula for generalized Gauss sums, which is
/// stated with half angles:
///   p^{-1/2} sum_{j<p} e^{i pi (j^2 m + j n)/p}
///     = e^{i pi (mp - n^2)/(4mp)} m^{-1/2} sum_{j<m} e^{-i pi (j^2 p + j n)/m}.
/// Requires m*p + n even.
inline double generalized_reciprocity_residual(const GaussSumParams& params) {
  detail::validate_pm(params, "generalized_reciprocity_residual");
  if (params.n < 0) throw contract_error("generalized_reciprocity_residual: n must be nonnegative");
  const std::int64_t mp = params.m * params.p;
  if ((mp + params.n) % 2 != 0) {
    throw contract_error("generalized_reciprocity_residual: m*p + n must be even (m=" + std::to_string(params.m) +
                         ", p=" + std::to_string(params.p) + ", n=" + std::to_string(params.n) + ")");
  }
  const complex lhs =
      detail::half_angle_sum(params.p, params.m, params.n, params.p) / std::sqrt(static_cast<double>(params.p));
  const __int128 n = params.n;
  const complex prefactor = detail::pi_phase(static_cast<__int128>(mp) - n * n, 4 * mp);
  const complex rhs = prefactor / std::sqrt(static_cast<double>(params.m)) *
                      detail::half_angle_sum(params.m, -params.p, -params.n, params.m);
  return std::abs(lhs - rhs);
}

/// Closed form of the t = 1 amplitude a_k(1) of the Gauss-sum family:
///   even D: e^{i pi/4} D^{-1/2} e^{-i pi k^2/D}
///   odd D:  e^{i pi/4} D^{-1/2} e^{-i pi k^2/(2D)} (1 - i^{2k+D}) / sqrt(2)
/// The fractional powers of omega are fixed to these branches.
inline complex closed_form_ak1(std::int64_t D, std::int64_t k) {
  if (D < 1) throw contract_error("closed_form_ak1: D must be >= 1");
  if (k < 0 || k >= D) {
    throw contract_error("closed_form_ak1: k=" + std::to_string(k) + " outside [0, " + std::to_string(D - 1) + "]");
  }
  const complex front = detail::pi_phase(1, 4) / std::sqrt(static_cast<double>(D));
  const __int128 kk = k;
  if (D % 2 == 0) return front * detail::pi_phase(-kk * kk, D);
  static constexpr complex powers_of_i[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const complex i_power = powers_of_i[(2 * k + D) % 4];
  return front * detail::pi_phase(-kk * kk, 2 * D) * (complex(1.0) - i_power) / std::numbers::sqrt2;
}

}  // namespace equibasis
