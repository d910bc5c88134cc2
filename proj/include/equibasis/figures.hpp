#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "equibasis/csv.hpp"
#include "equibasis/curve.hpp"
#include "equibasis/entanglement.hpp"
#include "equibasis/gauss_basis.hpp"
#include "equibasis/graph_basis.hpp"
#include "equibasis/multipartite.hpp"
#include "equibasis/parallel.hpp"

namespace equibasis {

/// Dimensions plotted together in the entropy and G-concurrence figures.
inline const std::vector<std::size_t> figure_dimensions{2, 3, 5, 8, 100};

inline constexpr std::size_t figure_grid_points = 201;

namespace detail {

inline Table amplitude_magnitudes(std::size_t D, std::span<const double> grid) {
  Table table;
  table.header.push_back("t");
  for (std::size_t k = 0; k < D; ++k) table.header.push_back("abs_a" + std::to_string(k));
  const PhaseVector phases = theorem1_phases(D);
  for (double t : grid) {
    std::vector<double> row{t};
    for (const auto& a : amplitudes(phases, t).a) row.push_back(std::abs(a));
    table.add_numeric_row(row);
  }
  return table;
}

inline Table measure_by_dimension(Construction construction, MeasureKind kind, const std::string& prefix,
                                  std::span<const std::size_t> dims, std::span<const double> grid) {
  Table table;
  table.header.push_back("t");
  std::vector<EntanglementCurve> curves;
  for (auto D : dims) {
    table.header.push_back(prefix + "_D" + std::to_string(D));
    curves.push_back(curve(construction, D, {kind, 0}, grid));
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<double> row{grid[i]};
    for (const auto& c : curves) row.push_back(c.values[i]);
    table.add_numeric_row(row);
  }
  return table;
}

inline Table complex_trajectory(std::size_t D, std::span<const double> grid) {
  if (D < 2) throw contract_error("figure 4: a_1(t) needs D >= 2");
  Table table{{"t", "re_a1", "im_a1"}, {}};
  const PhaseVector phases = theorem1_phases(D);
  for (double t : grid) {
    const complex a1 = amplitudes(phases, t).a[1];
    table.add_numeric_row({t, a1.real(), a1.imag()});
  }
  return table;
}

inline Table sqrt_schmidt_coefficients(std::size_t D, std::span<const double> grid) {
  Table table;
  table.header.push_back("t");
  for (std::size_t k = 0; k < D; ++k) table.header.push_back("sqrt_lambda" + std::to_string(k));
  std::vector<SchmidtSpectrum> spectra(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { spectra[i] = schmidt_spectrum(graph_family_state(D, grid[i], 0, 0).omega); });
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<double> row{grid[i]};
    for (double l : spectra[i].lambda) row.push_back(std::sqrt(l));
    table.add_numeric_row(row);
  }
  return table;
}

}  // namespace detail

/// Data behind figure `id` (1..8). `dimension` replaces the default D, or the
/// default list of dimensions for figures 3, 7 and 8.
inline Table figure_table(int id, std::optional<std::size_t> dimension = std::nullopt) {
  if (dimension && *dimension < 1) throw contract_error("figure: D must be >= 1");
  const std::vector<double> grid = uniform_grid(figure_grid_points);
  const std::vector<std::size_t> dims = dimension ? std::vector<std::size_t>{*dimension} : figure_dimensions;
  switch (id) {
    case 1: return detail::amplitude_magnitudes(dimension.value_or(5), grid);
    case 2: return detail::amplitude_magnitudes(dimension.value_or(8), grid);
    case 3: return detail::measure_by_dimension(Construction::gauss, MeasureKind::entropy, "entropy", dims, grid);
    case 4: return detail::complex_trajectory(dimension.value_or(51), grid);
    case 5: return detail::sqrt_schmidt_coefficients(dimension.value_or(5), grid);
    case 6: return detail::sqrt_schmidt_coefficients(dimension.value_or(8), grid);
    case 7: return detail::measure_by_dimension(Construction::graph, MeasureKind::entropy, "entropy", dims, grid);
    case 8: return detail::measure_by_dimension(Construction::graph, MeasureKind::g_concurrence, "cg", dims, grid);
    default: throw contract_error("figure: id must be in 1..8, got " + std::to_string(id));
  }
}

/// One row per Schmidt coefficient, then entropy and G-concurrence rows.
inline Table spectrum_table(Construction construction, std::size_t D, double t) {
  detail::require_unit_interval(t, "spectrum");
  const BipartiteStateMatrix omega = representative_state(construction, D, t);
  const SchmidtSpectrum spectrum = schmidt_spectrum(omega);
  Table table{{"index", "lambda", "sqrt_lambda"}, {}};
  for (std::size_t k = 0; k < spectrum.dim(); ++k) {
    table.add_row({std::to_string(k), format_double(spectrum.lambda[k]), format_double(std::sqrt(spectrum.lambda[k]))});
  }
  const double cg = construction == Construction::graph ? g_concurrence_closed_form(D, t) : g_concurrence_numeric(omega);
  table.add_row({"entropy", format_double(entropy_of_entanglement(spectrum)), ""});
  table.add_row({"g_concurrence", format_double(cg), ""});
  return table;
}

/// Every bipartition A|B of the n sites with the last site in B. Entropy is in
/// base D (local dimension), so a cut of a sites against b sites is at most min(a, b).
inline Table ghz_table(std::size_t sites, std::size_t D, double t, std::span<const std::size_t> shifts = {},
                       std::size_t cap = default_amplitude_cap) {
  const std::vector<std::size_t> zero_shifts(sites, 0);
  const MultipartiteState state =
      multipartite_family(sites, D, t, shifts.empty() ? std::span<const std::size_t>(zero_shifts) : shifts, cap);
  Table table{{"cut", "subsystem_size", "entropy"}, {}};
  if (sites > 62) throw contract_error("ghz: too many sites");
  for (std::size_t mask = 1; mask < (std::size_t{1} << (sites - 1)); ++mask) {
    std::vector<std::size_t> a;
    std::string label_a, label_b;
    for (std::size_t s = 0; s < sites; ++s) {
      std::string& label = (mask >> s) & 1 ? label_a : label_b;
      if (!label.empty()) label += '.';
      label += std::to_string(s);
      if ((mask >> s) & 1) a.push_back(s);
    }
    const double value = D < 2 ? 0.0 : entropy(schmidt_spectrum(bipartition_matrix(state, a)), static_cast<double>(D));
    table.add_row({label_a + "|" + label_b, std::to_string(a.size()), format_double(value)});
  }
  return table;
}

}  // namespace equibasis
