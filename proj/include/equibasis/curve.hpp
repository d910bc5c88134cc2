#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "equibasis/entanglement.hpp"
#include "equibasis/gauss_basis.hpp"
#include "equibasis/graph_basis.hpp"
#include "equibasis/parallel.hpp"

namespace equibasis {

enum class MeasureKind { entropy, g_concurrence, schmidt_coefficient };

struct Measure {
  MeasureKind kind = MeasureKind::entropy;
  std::size_t index = 0;  // which descending Schmidt coefficient, schmidt_coefficient only
};

/// Values of one entanglement measure over an ascending grid of t.
struct EntanglementCurve {
  std::vector<double> t_grid;
  std::vector<double> values;
  Measure measure;
};

/// `points` uniformly spaced values in [0, 1], endpoints included exactly.
inline std::vector<double> uniform_grid(std::size_t points = 201) {
  if (points < 2) throw contract_error("uniform_grid: need at least 2 points");
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) grid[i] = static_cast<double>(i) / static_cast<double>(points - 1);
  return grid;
}

/// The representative (m, n) = (0, 0) state of a family; all others share its spectrum.
inline BipartiteStateMatrix representative_state(Construction construction, std::size_t D, double t) {
  if (construction == Construction::gauss) return basis_state(amplitudes(theorem1_phases(D), t), 0, 0);
  return graph_family_state(D, t, 0, 0).omega;
}

inline EntanglementCurve curve(Construction construction, std::size_t D, Measure measure,
                               std::span<const double> t_grid) {
  if (t_grid.empty()) throw contract_error("curve: empty grid");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    detail::require_unit_interval(t_grid[i], "curve");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1])) throw contract_error("curve: grid must be strictly ascending");
  }
  if (measure.kind == MeasureKind::schmidt_coefficient) detail::require_index(measure.index, D, "curve");

  EntanglementCurve out{{t_grid.begin(), t_grid.end()}, std::vector<double>(t_grid.size()), measure};
  parallel_for(t_grid.size(), [&](std::size_t i) {
    const double t = t_grid[i];
    if (measure.kind == MeasureKind::g_concurrence && construction == Construction::graph) {
      out.values[i] = g_concurrence_closed_form(D, t);
      return;
    }
    const BipartiteStateMatrix omega = representative_state(construction, D, t);
    switch (measure.kind) {
      case MeasureKind::entropy:
        out.values[i] = entropy_of_entanglement(schmidt_spectrum(omega));
        break;
      case MeasureKind::g_concurrence:
        out.values[i] = g_concurrence_numeric(omega);
        break;
      case MeasureKind::schmidt_coefficient:
        out.values[i] = schmidt_spectrum(omega).lambda[measure.index];
        break;
    }
  });
  return out;
}

}  // namespace equibasis
