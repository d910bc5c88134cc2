#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "equibasis/curve.hpp"
#include "equibasis/entanglement.hpp"
#include "equibasis/gauss_basis.hpp"
#include "equibasis/gauss_sums.hpp"
#include "equibasis/graph_basis.hpp"
#include "equibasis/linalg.hpp"
#include "equibasis/multipartite.hpp"
#include "equibasis/parallel.hpp"
#include "equibasis/precision.hpp"

namespace equibasis {

enum class VerifyScope { all, gauss, graph, reciprocity, multipartite };

struct VerifyOptions {
  VerifyScope scope = VerifyScope::all;
  std::size_t dmax = 20;
  std::optional<double> tolerance;  // replaces every residual tolerance when set
};

/// One line of a verification report.
///
/// Residual checks pass when value <= threshold. Other checks carry their own
/// comparison (e.g. a strict positivity margin) and are not affected by a
/// tolerance override. Informational checks are reported but never fail.
struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool passed = false;
  bool informational = false;
};

struct VerifyReport {
  std::vector<Check> checks;

  [[nodiscard]] bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed || c.informational; });
  }
};

namespace detail {

class Suite {
 public:
  explicit Suite(const VerifyOptions& options) : options_(options) {}

  void residual(std::string name, double value, double default_tolerance) {
    const double tol = options_.tolerance.value_or(default_tolerance);
    checks_.push_back({std::move(name), value, tol, value <= tol, false});
  }

  /// Passes when value > threshold.
  void exceeds(std::string name, double value, double threshold) {
    checks_.push_back({std::move(name), value, threshold, value > threshold, false});
  }

  /// Passes when value < threshold.
  void below(std::string name, double value, double threshold) {
    checks_.push_back({std::move(name), value, threshold, value < threshold, false});
  }

  void info(std::string name, double value) { checks_.push_back({std::move(name), value, 0.0, true, true}); }

  [[nodiscard]] std::vector<Check> take() { return std::move(checks_); }
  [[nodiscard]] std::size_t dmax() const { return options_.dmax; }

 private:
  const VerifyOptions& options_;
  std::vector<Check> checks_;
};

inline const std::vector<double>& eleven_point_grid() {
  static const std::vector<double> grid = uniform_grid(11);
  return grid;
}

/// {0.01, 0.05, 0.1, 0.2, ..., 1}
inline std::vector<double> full_rank_grid() {
  std::vector<double> grid{0.01, 0.05};
  for (int i = 1; i <= 10; ++i) grid.push_back(i / 10.0);
  return grid;
}

/// max over states of the largest spectrum deviation from the first state.
inline double spectrum_spread(const std::vector<BipartiteStateMatrix>& states) {
  std::vector<SchmidtSpectrum> spectra(states.size());
  parallel_for(states.size(), [&](std::size_t i) { spectra[i] = schmidt_spectrum(states[i]); });
  double worst = 0.0;
  for (const auto& s : spectra) worst = std::max(worst, spectrum_distance(spectra.front(), s));
  return worst;
}

/// max |G - I| for the Gram matrix of vectorized states.
inline double gram_residual(const std::vector<std::vector<complex>>& vectors) {
  double worst = 0.0;
  for (std::size_t a = 0; a < vectors.size(); ++a) {
    for (std::size_t b = a; b < vectors.size(); ++b) {
      complex overlap{};
      for (std::size_t i = 0; i < vectors[a].size(); ++i) overlap += std::conj(vectors[a][i]) * vectors[b][i];
      if (a == b) overlap -= 1.0;
      worst = std::max(worst, std::abs(overlap));
    }
  }
  return worst;
}

inline std::vector<std::vector<complex>> vectorize(const std::vector<BipartiteStateMatrix>& states) {
  std::vector<std::vector<complex>> out;
  for (const auto& s : states) out.emplace_back(s.data().begin(), s.data().end());
  return out;
}

inline std::string upto(std::size_t d) { return " (D<=" + std::to_string(d) + ")"; }

inline std::vector<Check> reciprocity_suite(const VerifyOptions& options) {
  Suite suite(options);
  const auto limit = static_cast<std::int64_t>(suite.dmax());
  double ls = 0.0;
  for (std::int64_t p = 1; p <= limit; ++p)
    for (std::int64_t m = 1; m <= limit; ++m) ls = std::max(ls, landsberg_schaar_residual(p, m));
  suite.residual("landsberg-schaar residual (p,m<=" + std::to_string(limit) + ")", ls, 1e-10);

  double gr = 0.0;
  for (std::int64_t p = 1; p <= limit; ++p)
    for (std::int64_t m = 1; m <= limit; ++m)
      for (std::int64_t n = (m * p) % 2; n <= 2 * limit; n += 2) gr = std::max(gr, generalized_reciprocity_residual({p, m, n}));
  suite.residual("generalized reciprocity residual (p,m<=" + std::to_string(limit) + ", n<=" +
                     std::to_string(2 * limit) + ")",
                 gr, 1e-10);

  double closed = 0.0, modulus = 0.0;
  for (std::size_t D = 1; D <= suite.dmax(); ++D) {
    const CoefficientVector direct = amplitudes(theorem1_phases(D), 1.0);
    for (std::size_t k = 0; k < D; ++k) {
      const complex c = closed_form_ak1(static_cast<std::int64_t>(D), static_cast<std::int64_t>(k));
      closed = std::max(closed, std::abs(direct.a[k] - c));
      modulus = std::max(modulus, std::abs(std::abs(c) - 1.0 / std::sqrt(static_cast<double>(D))));
    }
  }
  suite.residual("closed-form a_k(1) vs direct sum" + upto(suite.dmax()), closed, 1e-10);
  suite.residual("|a_k(1)| - 1/sqrt(D)" + upto(suite.dmax()), modulus, 1e-12);
  return suite.take();
}

inline std::vector<Check> gauss_suite(const VerifyOptions& options) {
  Suite suite(options);
  const std::size_t dmax = suite.dmax();
  double ortho = 0.0;
  for (std::size_t D = 1; D <= dmax; ++D)
    for (double t : eleven_point_grid()) ortho = std::max(ortho, orthonormality_residual(amplitudes(theorem1_phases(D), t)));
  suite.residual("gauss autocorrelation orthonormality" + upto(dmax), ortho, 1e-10);

  const std::size_t gram_dmax = std::min<std::size_t>(dmax, 12);
  double gram = 0.0;
  for (std::size_t D = 1; D <= gram_dmax; ++D)
    for (double t : {0.0, 0.25, 0.5, 0.75, 1.0})
      gram = std::max(gram, gram_residual(vectorize(gauss_family({D, t, Construction::gauss}))));
  suite.residual("gauss full Gram matrix" + upto(gram_dmax), gram, 1e-10);

  const std::size_t spread_dmax = std::min<std::size_t>(dmax, 20);
  double spread = 0.0;
  for (std::size_t D = 1; D <= spread_dmax; ++D)
    for (double t : eleven_point_grid()) spread = std::max(spread, spectrum_spread(gauss_family({D, t, Construction::gauss})));
  suite.residual("gauss spectrum spread across D^2 states" + upto(spread_dmax), spread, 1e-10);

  double endpoints = 0.0;
  for (std::size_t D = 2; D <= dmax; ++D) {
    endpoints = std::max(endpoints, std::abs(entropy_of_entanglement(schmidt_spectrum(representative_state(Construction::gauss, D, 0.0)))));
    endpoints = std::max(endpoints, std::abs(entropy_of_entanglement(schmidt_spectrum(representative_state(Construction::gauss, D, 1.0))) - 1.0));
  }
  suite.residual("gauss entropy endpoints E(0)=0, E(1)=1" + upto(dmax), endpoints, 1e-10);

  // Lipschitz bound |a(t+h) - a(t)| <= h max_j |theta_j|, reported as the worst ratio.
  double lipschitz = 0.0;
  const double h = 1e-6;
  for (std::size_t D = 2; D <= dmax; ++D) {
    const PhaseVector phases = theorem1_phases(D);
    const double bound = *std::max_element(phases.theta.begin(), phases.theta.end());
    for (double t : eleven_point_grid()) {
      if (t + h > 1.0) continue;
      const auto a = amplitudes(phases, t).a;
      const auto b = amplitudes(phases, t + h).a;
      double step = 0.0;
      for (std::size_t k = 0; k < D; ++k) step += std::norm(b[k] - a[k]);
      lipschitz = std::max(lipschitz, std::sqrt(step) / (h * bound));
    }
  }
  suite.below("gauss amplitude Lipschitz ratio" + upto(dmax), lipschitz, 1.0 + 1e-6);

  double odd_min = std::numeric_limits<double>::infinity();
  const std::vector<double> grid = uniform_grid(201);
  for (std::size_t D = 3; D <= dmax; D += 2) {
    const PhaseVector phases = theorem1_phases(D);
    for (std::size_t i = 1; i < grid.size(); ++i)
      for (const auto& a : amplitudes(phases, grid[i]).a) odd_min = std::min(odd_min, std::abs(a));
  }
  if (dmax >= 3) suite.info("odd D: min |a_k(t)| over t in (0,1] (conjectured nonzero)" + upto(dmax), odd_min);
  return suite.take();
}

inline std::vector<Check> graph_suite(const VerifyOptions& options) {
  Suite suite(options);
  const std::size_t dmax = suite.dmax();

  double fourier = 0.0;
  for (std::size_t D = 1; D <= dmax; ++D) {
    for (std::size_t a = 0; a < D; ++a) {
      const auto u = fourier_state(D, a);
      for (std::size_t b = a; b < D; ++b) {
        const auto v = fourier_state(D, b);
        complex overlap{};
        for (std::size_t k = 0; k < D; ++k) overlap += std::conj(u[k]) * v[k];
        fourier = std::max(fourier, std::abs(overlap - (a == b ? 1.0 : 0.0)));
      }
    }
  }
  suite.residual("Fourier basis orthonormality" + upto(dmax), fourier, 1e-10);

  double unitarity = 0.0, commute = 0.0;
  for (std::size_t D = 1; D <= std::min<std::size_t>(dmax, 8); ++D) {
    for (double t : eleven_point_grid()) {
      const DiagonalGate cp = cp_gate(D, t);
      for (const auto& p : cp.phases) unitarity = std::max(unitarity, std::abs(std::abs(p) - 1.0));
      const BipartiteStateMatrix probe = fourier_product_state(D, 0, 0);
      unitarity = std::max(unitarity, max_abs_difference(cp.inverse().apply(cp.apply(probe)), probe));
      for (std::size_t m = 0; m < D; ++m) {
        for (std::size_t n = 0; n < D; ++n) {
          const DiagonalGate z = local_clock(D, m, n);
          commute = std::max(commute, max_abs_difference(z.apply(cp.apply(probe)), cp.apply(z.apply(probe))));
        }
      }
    }
  }
  suite.residual("CP(t) unitarity and inversion (D<=8)", unitarity, 1e-12);
  suite.residual("CP(t) commutes with Z^m x Z^n (D<=8)", commute, 1e-12);

  double ortho = 0.0;
  for (std::size_t D = 1; D <= dmax; ++D)
    for (double t : eleven_point_grid()) ortho = std::max(ortho, graph_orthonormality_residual(D, t));
  suite.residual("graph basis orthonormality" + upto(dmax), ortho, 1e-10);

  const std::size_t spread_dmax = std::min<std::size_t>(dmax, 20);
  double spread = 0.0;
  for (std::size_t D = 1; D <= spread_dmax; ++D)
    for (double t : eleven_point_grid()) spread = std::max(spread, spectrum_spread(graph_family({D, t, Construction::graph})));
  suite.residual("graph spectrum spread across D^2 states" + upto(spread_dmax), spread, 1e-10);

  double endpoints = 0.0;
  for (std::size_t D = 2; D <= dmax; ++D) {
    endpoints = std::max(endpoints, std::abs(entropy_of_entanglement(schmidt_spectrum(graph_family_state(D, 0.0, 0, 0).omega))));
    endpoints = std::max(endpoints, std::abs(entropy_of_entanglement(schmidt_spectrum(graph_family_state(D, 1.0, 0, 0).omega)) - 1.0));
  }
  suite.residual("graph entropy endpoints E(0)=0, E(1)=1" + upto(dmax), endpoints, 1e-10);

  // Full rank: every lambda_k <= 1, so lambda_min >= prod lambda_k = |det Omega|^2.
  double worst_bound = std::numeric_limits<double>::infinity();
  double numeric_min = std::numeric_limits<double>::infinity();
  double bound_gap = -std::numeric_limits<double>::infinity();
  bool certified = true;
  for (std::size_t D = 2; D <= dmax; ++D) {
    for (double t : full_rank_grid()) {
      certified = certified && full_rank_certificate(D, t);
      const double log10_bound =
          2.0 * (vandermonde_log_abs_det(D, t) - static_cast<double>(D) * std::log(static_cast<double>(D))) / std::log(10.0);
      worst_bound = std::min(worst_bound, log10_bound);
      const double log10_lambda = log_min_schmidt_coefficient(D, t) / std::log(10.0);
      numeric_min = std::min(numeric_min, log10_lambda);
      bound_gap = std::max(bound_gap, log10_bound - log10_lambda);
    }
  }
  suite.exceeds("full rank: certificate holds and log10 lower bound on lambda_min is finite" + upto(dmax),
                certified ? worst_bound : -std::numeric_limits<double>::infinity(),
                -std::numeric_limits<double>::infinity());
  suite.exceeds("full rank: min log10 lambda_min via extended-precision inverse" + upto(dmax), numeric_min,
                -std::numeric_limits<double>::infinity());
  suite.below("full rank: determinant bound minus log10 lambda_min (must not exceed 0)" + upto(dmax), bound_gap, 1e-9);

  const std::size_t vdm_dmax = std::min<std::size_t>(dmax, 20);
  std::vector<double> vdm(vdm_dmax + 1, 0.0);
  parallel_for(vdm_dmax + 1, [&](std::size_t D) {
    if (D < 2) return;
    for (double t : full_rank_grid()) {
      Matrix<wide_complex> scaled = graph_omega<wide_complex>(D, t);
      scaled *= wide_complex(static_cast<double>(D));
      const double lu_log = static_cast<double>(log_abs_determinant(scaled));
      vdm[D] = std::max(vdm[D], std::abs(lu_log - vandermonde_log_abs_det(D, t)));
    }
  });
  suite.residual("Vandermonde product vs LU |det| (relative, 100-digit LU)" + upto(vdm_dmax),
                 *std::max_element(vdm.begin(), vdm.end()), 1e-9);

  const std::size_t cg_dmax = std::min<std::size_t>(dmax, 30);
  const std::vector<double> grid101 = uniform_grid(101);
  std::vector<double> cg_err(cg_dmax + 1, 0.0);
  parallel_for((cg_dmax + 1) * grid101.size(), [&](std::size_t job) {
    const std::size_t D = job / grid101.size();
    if (D < 1) return;
    const double t = grid101[job % grid101.size()];
    const double numeric = g_concurrence_numeric(graph_omega<wide_complex>(D, t));
    const double err = std::abs(numeric - g_concurrence_closed_form(D, t));
    static std::mutex guard;
    std::lock_guard lock(guard);
    cg_err[D] = std::max(cg_err[D], err);
  });
  suite.residual("closed-form CG vs D|det Omega|^(2/D) (101-point grid)" + upto(cg_dmax),
                 *std::max_element(cg_err.begin(), cg_err.end()), 1e-9);

  double cg_one = 0.0;
  for (std::size_t D = 1; D <= dmax; ++D) {
    cg_one = std::max(cg_one, std::abs(g_concurrence_closed_form(D, 1.0) - 1.0));
    cg_one = std::max(cg_one, std::abs(g_concurrence_numeric(graph_family_state(D, 1.0, 0, 0).omega) - 1.0));
  }
  suite.residual("CG(1) = 1 (closed form and numeric)" + upto(dmax), cg_one, 1e-10);

  double min_increment = std::numeric_limits<double>::infinity();
  const std::vector<double> dense = uniform_grid(201);
  for (std::size_t D = 2; D <= dmax; ++D) {
    for (std::size_t i = 2; i + 1 < dense.size(); ++i) {
      min_increment = std::min(min_increment, log_g_concurrence_closed_form(D, dense[i]) - log_g_concurrence_closed_form(D, dense[i - 1]));
    }
  }
  suite.exceeds("CG strictly increasing on interior grid, min log-increment" + upto(dmax), min_increment, 0.0);

  const std::size_t fd_dmax = std::min<std::size_t>(dmax, 20);
  double fd = 0.0, second = -std::numeric_limits<double>::infinity();
  const double h = 5e-7, h2 = 1e-4;
  for (std::size_t D = 2; D <= fd_dmax; ++D) {
    for (int i = 10; i <= 99; ++i) {
      const double t = i / 100.0;
      const double centered =
          (log_g_concurrence_closed_form(D, t + h) - log_g_concurrence_closed_form(D, t - h)) / (2.0 * h);
      fd = std::max(fd, std::abs(centered - log_cg_derivative(D, t)));
      const double curvature = (log_g_concurrence_closed_form(D, t + h2) - 2.0 * log_g_concurrence_closed_form(D, t) +
                                log_g_concurrence_closed_form(D, t - h2)) / (h2 * h2);
      second = std::max(second, curvature);
    }
  }
  suite.residual("d/dt log CG vs centered finite difference" + upto(fd_dmax), fd, 1e-6);
  suite.below("d^2/dt^2 log CG < 0 (max finite-difference value)" + upto(fd_dmax), second, 0.0);

  double cot = 0.0;
  for (std::size_t D = 2; D <= std::max<std::size_t>(dmax, 2); ++D) cot = std::max(cot, std::abs(cot_weight_sum(D)));
  suite.residual("sum r(D-r) cot(pi r/D) = 0" + upto(dmax), cot, 1e-9);

  const std::size_t mono_dmax = std::min<std::size_t>(dmax, 10);
  double entropy_increment = std::numeric_limits<double>::infinity();
  for (std::size_t D = 2; D <= mono_dmax; ++D) {
    const auto c = curve(Construction::graph, D, {MeasureKind::entropy, 0}, dense);
    for (std::size_t i = 1; i < c.values.size(); ++i) entropy_increment = std::min(entropy_increment, c.values[i] - c.values[i - 1]);
  }
  suite.info("graph entropy min increment on 201-point grid (monotonicity unproven)" + upto(mono_dmax), entropy_increment);
  return suite.take();
}

inline std::vector<Check> multipartite_suite(const VerifyOptions& options) {
  Suite suite(options);
  {
    const MultipartiteState ghz = ghz_graph_state(3, 2, 1.0);
    double worst = 0.0;
    for (std::size_t site = 0; site < 3; ++site) {
      const std::size_t a[] = {site};
      for (double ev : hermitian_eigenvalues(reduced_density_matrix(ghz, a))) worst = std::max(worst, std::abs(ev - 0.5));
    }
    suite.residual("n=3 D=2 t=1: single-site reduced states are I/2", worst, 1e-10);
  }
  {
    double gram = 0.0;
    for (auto [D, t] : {std::pair<std::size_t, double>{2, 1.0}, {3, 0.5}}) {
      std::vector<std::vector<complex>> vectors;
      for (std::size_t index = 0; index < D * D * D; ++index) {
        const std::size_t shifts[] = {index / (D * D), (index / D) % D, index % D};
        vectors.push_back(multipartite_family(3, D, t, shifts).amplitudes);
      }
      gram = std::max(gram, gram_residual(vectors));
    }
    suite.residual("n=3 shifted states orthonormal (D=2 t=1, D=3 t=0.5)", gram, 1e-10);
  }
  {
    double spread = 0.0;
    for (std::size_t cut = 0; cut < 3; ++cut) {
      const std::size_t a[] = {cut};
      std::optional<SchmidtSpectrum> reference;
      for (std::size_t index = 0; index < 8; ++index) {
        const std::size_t shifts[] = {index >> 2, (index >> 1) & 1, index & 1};
        const SchmidtSpectrum s = schmidt_spectrum(bipartition_matrix(multipartite_family(3, 2, 0.6, shifts), a));
        if (!reference) reference = s;
        spread = std::max(spread, spectrum_distance(*reference, s));
      }
    }
    suite.residual("n=3 D=2 t=0.6: spectra equal across shifts for every 1|2 cut", spread, 1e-10);
  }
  {
    double worst = 0.0;
    for (std::size_t D : {2, 3}) {
      const MultipartiteState product = ghz_graph_state(3, D, 0.0);
      for (std::size_t cut = 0; cut < 3; ++cut) {
        const std::size_t a[] = {cut};
        worst = std::max(worst, entropy(schmidt_spectrum(bipartition_matrix(product, a)), static_cast<double>(D)));
      }
    }
    suite.residual("n=3 t=0: all bipartition entropies vanish", worst, 1e-10);
  }
  {
    double worst = 0.0;
    for (std::size_t D = 1; D <= std::min<std::size_t>(suite.dmax(), 8); ++D) {
      for (double t : eleven_point_grid()) {
        const MultipartiteState two = ghz_graph_state(2, D, t);
        const BipartiteStateMatrix omega = graph_family_state(D, t, 0, 0).omega;
        for (std::size_t i = 0; i < D * D; ++i) worst = std::max(worst, std::abs(two.amplitudes[i] - omega.data()[i]));
      }
    }
    suite.residual("n=2 complete graph equals the bipartite graph family (D<=8)", worst, 1e-12);
  }
  return suite.take();
}

}  // namespace detail

inline VerifyReport run_verification(const VerifyOptions& options) {
  if (options.dmax < 2) throw contract_error("verify: dmax must be >= 2");
  VerifyReport report;
  auto append = [&report](std::vector<Check> checks) {
    report.checks.insert(report.checks.end(), checks.begin(), checks.end());
  };
  const bool all = options.scope == VerifyScope::all;
  if (all || options.scope == VerifyScope::reciprocity) append(detail::reciprocity_suite(options));
  if (all || options.scope == VerifyScope::gauss) append(detail::gauss_suite(options));
  if (all || options.scope == VerifyScope::graph) append(detail::graph_suite(options));
  if (all || options.scope == VerifyScope::multipartite) append(detail::multipartite_suite(options));
  return report;
}

}  // namespace equibasis
