#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include "equibasis/errors.hpp"
#include "equibasis/gauss_basis.hpp"
#include "equibasis/linalg.hpp"
#include "equibasis/matrix.hpp"
#include "equibasis/precision.hpp"

namespace equibasis {

/// Z^m |+> = D^{-1/2} (1, omega^m, omega^{2m}, ...).
inline ComplexVector fourier_state(std::size_t D, std::size_t m) {
  detail::require_dimension(D, "fourier_state");
  detail::require_index(m, D, "fourier_state");
  const double norm = 1.0 / std::sqrt(static_cast<double>(D));
  const double step = 2.0 * std::numbers::pi / static_cast<double>(D);
  ComplexVector out(D);
  for (std::size_t k = 0; k < D; ++k) out[k] = std::polar(norm, step * static_cast<double>((k * m) % D));
  return out;
}

/// Diagonal operator on the D^2 two-qudit amplitudes; phase (j, k) sits at j*D + k.
struct DiagonalGate {
  std::size_t D = 0;
  std::vector<complex> phases;

  [[nodiscard]] complex phase(std::size_t j, std::size_t k) const { return phases[j * D + k]; }

  [[nodiscard]] BipartiteStateMatrix apply(const BipartiteStateMatrix& state) const {
    if (state.rows() != D || state.cols() != D) throw shape_error("DiagonalGate::apply: state must be D x D");
    BipartiteStateMatrix out = state;
    for (std::size_t i = 0; i < phases.size(); ++i) out.data()[i] *= phases[i];
    return out;
  }

  [[nodiscard]] DiagonalGate inverse() const {
    DiagonalGate out{D, phases};
    for (auto& p : out.phases) p = std::conj(p);
    return out;
  }

  [[nodiscard]] DiagonalGate then(const DiagonalGate& next) const {
    if (next.D != D) throw shape_error("DiagonalGate::then: dimension mismatch");
    DiagonalGate out{D, phases};
    for (std::size_t i = 0; i < phases.size(); ++i) out.phases[i] *= next.phases[i];
    return out;
  }
};

/// Tunable controlled-phase gate CP(t) = sum_{jk} omega^{jkt} |j><j| (x) |k><k|.
///
/// omega^{jkt} is exp(2 pi i j k t / D) with j*k taken as an exact integer.
/// j*k must not be reduced modulo D first: for non-integer t that changes the
/// phase, and the interpolation between CP(0) = I and CP(1) = CP relies on it.
inline DiagonalGate cp_gate(std::size_t D, double t) {
  detail::require_dimension(D, "cp_gate");
  detail::require_unit_interval(t, "cp_gate");
  DiagonalGate gate{D, std::vector<complex>(D * D)};
  const double scale = 2.0 * std::numbers::pi * t / static_cast<double>(D);
  for (std::size_t j = 0; j < D; ++j)
    for (std::size_t k = 0; k < D; ++k) gate.phases[j * D + k] = std::polar(1.0, scale * static_cast<double>(j * k));
  return gate;
}

/// Z^m (x) Z^n as a diagonal gate.
inline DiagonalGate local_clock(std::size_t D, std::size_t m, std::size_t n) {
  detail::require_dimension(D, "local_clock");
  DiagonalGate gate{D, std::vector<complex>(D * D)};
  const double step = 2.0 * std::numbers::pi / static_cast<double>(D);
  for (std::size_t j = 0; j < D; ++j)
    for (std::size_t k = 0; k < D; ++k) gate.phases[j * D + k] = std::polar(1.0, step * static_cast<double>((j * m + k * n) % D));
  return gate;
}

/// |m-bar>|n-bar> as a coefficient matrix.
inline BipartiteStateMatrix fourier_product_state(std::size_t D, std::size_t m, std::size_t n) {
  const ComplexVector left = fourier_state(D, m);
  const ComplexVector right = fourier_state(D, n);
  BipartiteStateMatrix out(D, D);
  for (std::size_t j = 0; j < D; ++j)
    for (std::size_t k = 0; k < D; ++k) out(j, k) = left[j] * right[k];
  return out;
}

/// Omega_jk = omega^{jm} omega^{kn} omega^{jkt} / D for any supported complex type.
/// The extended-precision instantiation exists for determinant cross-checks.
template <typename Complex = complex>
Matrix<Complex> graph_omega(std::size_t D, double t, std::size_t m = 0, std::size_t n = 0) {
  using Real = real_of_t<Complex>;
  detail::require_dimension(D, "graph_omega");
  detail::require_index(m, D, "graph_omega");
  detail::require_index(n, D, "graph_omega");
  const Real two_pi_over_d = 2 * pi_constant<Real>() / Real(static_cast<double>(D));
  const Real t_exact(t);
  Matrix<Complex> out(D, D);
  for (std::size_t j = 0; j < D; ++j) {
    for (std::size_t k = 0; k < D; ++k) {
      const Real turns = Real(static_cast<double>(j * k)) * t_exact + Real(static_cast<double>((j * m + k * n) % D));
      out(j, k) = unit_phase<Complex>(two_pi_over_d * turns) / Complex(Real(static_cast<double>(D)));
    }
  }
  return out;
}

/// |G_{m,n}(t)> = (Z^m (x) Z^n) CP(t) |+>|+>.
struct GraphFamilyState {
  std::size_t D = 0;
  double t = 0.0;
  std::size_t m = 0;
  std::size_t n = 0;
  BipartiteStateMatrix omega{1, 1};
};

inline GraphFamilyState graph_family_state(std::size_t D, double t, std::size_t m, std::size_t n) {
  detail::require_unit_interval(t, "graph_family_state");
  return {D, t, m, n, cp_gate(D, t).apply(fourier_product_state(D, m, n))};
}

/// All D^2 coefficient matrices of the graph family at (D, t), n fastest.
inline std::vector<BipartiteStateMatrix> graph_family(const BasisFamilySpec& spec) {
  if (spec.construction != Construction::graph) throw contract_error("graph_family: construction must be graph");
  std::vector<BipartiteStateMatrix> states;
  states.reserve(spec.D * spec.D);
  for (std::size_t m = 0; m < spec.D; ++m)
    for (std::size_t n = 0; n < spec.D; ++n) states.push_back(graph_family_state(spec.D, spec.t, m, n).omega);
  return states;
}

/// max over shifts (dm, dn) of |<G_{0,0}(t)|G_{dm,dn}(t)> - delta|. The clock
/// shifts form a group, so this covers every pair of basis states.
inline double graph_orthonormality_residual(std::size_t D, double t) {
  const BipartiteStateMatrix base = graph_family_state(D, t, 0, 0).omega;
  std::vector<complex> roots(D);
  for (std::size_t x = 0; x < D; ++x) roots[x] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(x) / static_cast<double>(D));
  double worst = 0.0;
  for (std::size_t dm = 0; dm < D; ++dm) {
    for (std::size_t dn = 0; dn < D; ++dn) {
      complex overlap{};
      for (std::size_t j = 0; j < D; ++j)
        for (std::size_t k = 0; k < D; ++k) overlap += std::norm(base(j, k)) * roots[(j * dm + k * dn) % D];
      if (dm == 0 && dn == 0) overlap -= 1.0;
      worst = std::max(worst, std::abs(overlap));
    }
  }
  return worst;
}

/// det[D * Omega(t)] as the Vandermonde product prod_{j>k} omega^{kt} (omega^{(j-k)t} - 1).
/// Underflows to zero for large D at small t; use vandermonde_log_abs_det there.
inline complex vandermonde_det(std::size_t D, double t) {
  detail::require_dimension(D, "vandermonde_det");
  detail::require_unit_interval(t, "vandermonde_det");
  const double unit = std::numbers::pi * t / static_cast<double>(D);
  complex product{1.0, 0.0};
  for (std::size_t j = 1; j < D; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      const double r = static_cast<double>(j - k);
      // omega^{rt} - 1 = 2i sin(pi r t / D) exp(i pi r t / D)
      const complex gap = complex(0.0, 2.0 * std::sin(unit * r)) * std::polar(1.0, unit * r);
      product *= std::polar(1.0, 2.0 * unit * static_cast<double>(k)) * gap;
    }
  }
  return product;
}

/// log|det[D * Omega(t)]| from the same product, summed in the log domain.
inline double vandermonde_log_abs_det(std::size_t D, double t) {
  detail::require_dimension(D, "vandermonde_log_abs_det");
  detail::require_unit_interval(t, "vandermonde_log_abs_det");
  const long double unit = std::numbers::pi_v<long double> * t / static_cast<long double>(D);
  long double sum = 0.0L;
  for (std::size_t j = 1; j < D; ++j)
    for (std::size_t k = 0; k < j; ++k) sum += std::log(std::abs(2.0L * std::sin(unit * static_cast<long double>(j - k))));
  return static_cast<double>(sum);
}

/// A vanishing Vandermonde factor: (j - k) t = n D.
struct DeterminantZero {
  std::size_t node_gap = 0;  // j - k
  long long winding = 0;     // n
};

/// Every node gap 1..D-1 whose factor omega^{(j-k)t} - 1 vanishes at this t.
/// Accepts any real t (diagnostic use outside the family range).
inline std::vector<DeterminantZero> determinant_zeros(std::size_t D, double t) {
  detail::require_dimension(D, "determinant_zeros");
  if (!std::isfinite(t)) throw contract_error("determinant_zeros: t must be finite");
  std::vector<DeterminantZero> zeros;
  for (std::size_t gap = 1; gap < D; ++gap) {
    const double winding = static_cast<double>(gap) * t / static_cast<double>(D);
    const double nearest = std::round(winding);
    if (std::abs(winding - nearest) <= 1e-12 * std::max(1.0, std::abs(winding))) {
      zeros.push_back({gap, static_cast<long long>(nearest)});
    }
  }
  return zeros;
}

/// True when Omega(t) has full Schmidt rank, decided by the Vandermonde factor
/// criterion: rank drops iff some node gap satisfies (j - k) t = n D.
inline bool full_rank_certificate(std::size_t D, double t) {
  if (D == 1) return true;
  return determinant_zeros(D, t).empty();
}

namespace detail {

/// -2 log sigma_max(Omega^{-1}) with the inverse formed in Complex arithmetic.
template <typename Complex>
double log_min_schmidt_at(std::size_t D, double t) {
  using Real = real_of_t<Complex>;
  const Matrix<Complex> inverse = lu_inverse(graph_omega<Complex>(D, t));
  Real largest = 0;
  for (const auto& e : inverse.data()) largest = std::max(largest, Real(abs(e)));
  ComplexMatrix scaled(D, D);
  for (std::size_t i = 0; i < D * D; ++i) {
    const Complex e = inverse.data()[i] / Complex(largest);
    scaled.data()[i] = {static_cast<double>(e.real()), static_cast<double>(e.imag())};
  }
  return -2.0 * (std::log(singular_values(scaled).front()) + static_cast<double>(log(largest)));
}

}  // namespace detail

/// log of the smallest Schmidt coefficient of Omega(t); -inf when the rank drops.
///
/// Computed as -2 log sigma_max(Omega^{-1}): the largest singular value of the inverse
/// keeps full relative accuracy in double, while the smallest singular value of Omega
/// itself is lost to roundoff once it falls below ~1e-16. The inverse needs about
/// log10 cond(Omega) digits beyond double, so 100 digits are tried first and 250 after.
inline double log_min_schmidt_coefficient(std::size_t D, double t) {
  detail::require_dimension(D, "log_min_schmidt_coefficient");
  detail::require_unit_interval(t, "log_min_schmidt_coefficient");
  if (!full_rank_certificate(D, t)) return -std::numeric_limits<double>::infinity();
  // Omega has unit Frobenius norm, so cond(Omega) <= 1 / sigma_min = exp(-log_lambda / 2).
  auto cond_digits = [](double log_lambda) { return -0.5 * log_lambda / std::numbers::ln10; };
  const double first = detail::log_min_schmidt_at<wide_complex>(D, t);
  if (cond_digits(first) < 75.0) return first;
  const double second = detail::log_min_schmidt_at<deep_complex>(D, t);
  if (cond_digits(second) < 225.0) return second;
  throw numeric_error("log_min_schmidt_coefficient: Omega too ill-conditioned for 250-digit inversion");
}

}  // namespace equibasis
