#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "equibasis/errors.hpp"
#include "equibasis/gauss_basis.hpp"
#include "equibasis/linalg.hpp"
#include "equibasis/matrix.hpp"

namespace equibasis {

/// Default cap on D^n_sites amplitudes (2^24 complex doubles, 256 MiB).
inline constexpr std::size_t default_amplitude_cap = std::size_t{1} << 24;

/// Pure state of n qudits. Amplitudes are indexed in mixed radix with site 0
/// the most significant digit: index = sum_i q_i D^{n-1-i}.
struct MultipartiteState {
  std::size_t sites = 0;
  std::size_t D = 0;
  std::vector<complex> amplitudes;

  [[nodiscard]] std::vector<std::size_t> digits(std::size_t index) const {
    std::vector<std::size_t> q(sites);
    for (std::size_t i = sites; i-- > 0;) {
      q[i] = index % D;
      index /= D;
    }
    return q;
  }
};

namespace detail {

inline std::size_t checked_power(std::size_t D, std::size_t sites, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < sites; ++i) {
    if (total > cap / D) {
      throw resource_error("multipartite state: D^n = " + std::to_string(D) + "^" + std::to_string(sites) +
                           " exceeds the amplitude cap " + std::to_string(cap));
    }
    total *= D;
  }
  return total;
}

}  // namespace detail

/// Complete-graph state prod_{i<j} CP_ij(t) |+>^{(x) n}:
/// amplitude D^{-n/2} exp(2 pi i t sum_{i<j} q_i q_j / D).
inline MultipartiteState ghz_graph_state(std::size_t sites, std::size_t D, double t,
                                         std::size_t cap = default_amplitude_cap) {
  if (sites < 2) throw contract_error("ghz_graph_state: need at least 2 sites");
  detail::require_dimension(D, "ghz_graph_state");
  detail::require_unit_interval(t, "ghz_graph_state");
  const std::size_t size = detail::checked_power(D, sites, cap);
  MultipartiteState state{sites, D, std::vector<complex>(size)};
  const double norm = std::pow(static_cast<double>(D), -0.5 * static_cast<double>(sites));
  const double scale = 2.0 * std::numbers::pi * t / static_cast<double>(D);
  for (std::size_t index = 0; index < size; ++index) {
    const auto q = state.digits(index);
    std::uint64_t pair_sum = 0;
    std::uint64_t prefix = 0;
    for (std::size_t i = 0; i < sites; ++i) {
      pair_sum += prefix * q[i];
      prefix += q[i];
    }
    state.amplitudes[index] = std::polar(norm, scale * static_cast<double>(pair_sum));
  }
  return state;
}

/// ghz_graph_state with Z^{shifts[i]} applied on site i.
inline MultipartiteState multipartite_family(std::size_t sites, std::size_t D, double t,
                                             std::span<const std::size_t> shifts,
                                             std::size_t cap = default_amplitude_cap) {
  if (shifts.size() != sites) {
    throw contract_error("multipartite_family: expected " + std::to_string(sites) + " shifts, got " +
                         std::to_string(shifts.size()));
  }
  for (auto s : shifts) detail::require_index(s, D, "multipartite_family");
  MultipartiteState state = ghz_graph_state(sites, D, t, cap);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(D);
  for (std::size_t index = 0; index < state.amplitudes.size(); ++index) {
    const auto q = state.digits(index);
    std::size_t clock = 0;
    for (std::size_t i = 0; i < sites; ++i) clock = (clock + shifts[i] * q[i]) % D;
    state.amplitudes[index] *= std::polar(1.0, step * static_cast<double>(clock));
  }
  return state;
}

/// Reshape into a D^|A| x D^(n-|A|) matrix. Rows enumerate the sites in
/// `subsystem` in the given order; columns the remaining sites ascending.
inline ComplexMatrix bipartition_matrix(const MultipartiteState& state, std::span<const std::size_t> subsystem) {
  std::vector<bool> in_a(state.sites, false);
  for (auto s : subsystem) {
    detail::require_index(s, state.sites, "bipartition_matrix");
    if (in_a[s]) throw contract_error("bipartition_matrix: repeated site " + std::to_string(s));
    in_a[s] = true;
  }
  if (subsystem.empty() || subsystem.size() == state.sites) {
    throw contract_error("bipartition_matrix: subsystem must be a nonempty proper subset");
  }
  std::vector<std::size_t> rest;
  for (std::size_t s = 0; s < state.sites; ++s)
    if (!in_a[s]) rest.push_back(s);

  auto radix_size = [&](std::size_t count) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < count; ++i) total *= state.D;
    return total;
  };
  ComplexMatrix out(radix_size(subsystem.size()), radix_size(rest.size()));
  for (std::size_t index = 0; index < state.amplitudes.size(); ++index) {
    const auto q = state.digits(index);
    std::size_t row = 0, col = 0;
    for (auto s : subsystem) row = row * state.D + q[s];
    for (auto s : rest) col = col * state.D + q[s];
    out(row, col) = state.amplitudes[index];
  }
  return out;
}

/// rho_A = Tr_B |psi><psi| for the sites in `subsystem`.
inline ComplexMatrix reduced_density_matrix(const MultipartiteState& state, std::span<const std::size_t> subsystem) {
  const ComplexMatrix cut = bipartition_matrix(state, subsystem);
  return matmul(cut, conj_transpose(cut));
}

}  // namespace equibasis
