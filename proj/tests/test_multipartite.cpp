#include <gtest/gtest.h>

#include <cmath>

#include "equibasis/entanglement.hpp"
#include "equibasis/graph_basis.hpp"
#include "equibasis/linalg.hpp"
#include "equibasis/multipartite.hpp"

using namespace equibasis;

namespace {

double norm_of(const MultipartiteState& s) {
  double sum = 0.0;
  for (const auto& a : s.amplitudes) sum += std::norm(a);
  return std::sqrt(sum);
}

std::vector<std::size_t> shifts_of(std::size_t index, std::size_t sites, std::size_t D) {
  std::vector<std::size_t> out(sites);
  for (std::size_t i = sites; i-- > 0;) {
    out[i] = index % D;
    index /= D;
  }
  return out;
}

}  // namespace

TEST(GhzGraphState, TwoSitesMatchBipartiteFamily) {
  for (std::size_t D = 1; D <= 6; ++D) {
    for (double t : {0.0, 0.35, 1.0}) {
      const auto two = ghz_graph_state(2, D, t);
      const auto omega = graph_family_state(D, t, 0, 0).omega;
      for (std::size_t i = 0; i < D * D; ++i) EXPECT_NEAR(std::abs(two.amplitudes[i] - omega.data()[i]), 0.0, 1e-15);
    }
  }
}

TEST(GhzGraphState, UnitNorm) {
  for (std::size_t sites : {2u, 3u, 4u})
    for (std::size_t D : {2u, 3u, 5u}) EXPECT_NEAR(norm_of(ghz_graph_state(sites, D, 0.41)), 1.0, 1e-12);
}

TEST(GhzGraphState, ThreeQubitsAtOneHaveMaximallyMixedMarginals) {
  const auto ghz = ghz_graph_state(3, 2, 1.0);
  for (std::size_t site = 0; site < 3; ++site) {
    const std::size_t a[] = {site};
    const ComplexMatrix rho = reduced_density_matrix(ghz, a);
    EXPECT_LT(max_abs_difference(rho, ComplexMatrix{{0.5, 0.0}, {0.0, 0.5}}), 1e-12);
    for (double ev : hermitian_eigenvalues(rho)) EXPECT_NEAR(ev, 0.5, 1e-10);
  }
}

TEST(GhzGraphState, ThreeQubitsAtZeroAreProduct) {
  const auto plus = ghz_graph_state(3, 2, 0.0);
  for (const auto& a : plus.amplitudes) EXPECT_NEAR(std::abs(a - 1.0 / std::sqrt(8.0)), 0.0, 1e-15);
  for (std::size_t site = 0; site < 3; ++site) {
    const std::size_t a[] = {site};
    EXPECT_NEAR(entropy(schmidt_spectrum(bipartition_matrix(plus, a)), 2.0), 0.0, 1e-12);
  }
}

TEST(GhzGraphState, Errors) {
  EXPECT_THROW(ghz_graph_state(1, 2, 0.5), contract_error);
  EXPECT_THROW(ghz_graph_state(3, 2, 1.5), contract_error);
  EXPECT_THROW(ghz_graph_state(30, 3, 0.5), resource_error);
  EXPECT_THROW(ghz_graph_state(5, 2, 0.5, 16), resource_error);
  EXPECT_NO_THROW(ghz_graph_state(4, 2, 0.5, 16));
}

TEST(MultipartiteFamily, ZeroShiftsGiveTheGraphState) {
  const std::size_t zeros[] = {0, 0, 0};
  EXPECT_EQ(multipartite_family(3, 3, 0.7, zeros).amplitudes, ghz_graph_state(3, 3, 0.7).amplitudes);
}

TEST(MultipartiteFamily, ShiftValidation) {
  const std::size_t too_few[] = {0, 1};
  const std::size_t out_of_range[] = {0, 1, 3};
  EXPECT_THROW(multipartite_family(3, 3, 0.7, too_few), contract_error);
  EXPECT_THROW(multipartite_family(3, 3, 0.7, out_of_range), contract_error);
}

TEST(MultipartiteFamily, ShiftedStatesShareCutSpectra) {
  for (std::size_t cut = 0; cut < 3; ++cut) {
    const std::size_t a[] = {cut};
    const auto reference = schmidt_spectrum(bipartition_matrix(ghz_graph_state(3, 2, 0.6), a));
    for (std::size_t index = 0; index < 8; ++index) {
      const auto shifts = shifts_of(index, 3, 2);
      const auto s = schmidt_spectrum(bipartition_matrix(multipartite_family(3, 2, 0.6, shifts), a));
      EXPECT_LT(spectrum_distance(reference, s), 1e-10);
    }
  }
}

TEST(MultipartiteFamily, ShiftedStatesAreOrthonormal) {
  const std::size_t D = 3, sites = 3, count = 27;
  std::vector<MultipartiteState> states;
  for (std::size_t index = 0; index < count; ++index) states.push_back(multipartite_family(sites, D, 0.5, shifts_of(index, sites, D)));
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      complex overlap{};
      for (std::size_t i = 0; i < states[a].amplitudes.size(); ++i) overlap += std::conj(states[a].amplitudes[i]) * states[b].amplitudes[i];
      ASSERT_NEAR(std::abs(overlap - (a == b ? 1.0 : 0.0)), 0.0, 1e-10);
    }
  }
}

TEST(BipartitionMatrix, IndexingFollowsSubsystemOrder) {
  MultipartiteState s{3, 2, std::vector<complex>(8)};
  for (std::size_t i = 0; i < 8; ++i) s.amplitudes[i] = static_cast<double>(i);  // index = 4 q0 + 2 q1 + q2
  const std::size_t a[] = {2, 0};
  const ComplexMatrix m = bipartition_matrix(s, a);
  ASSERT_EQ(m.rows(), 4u);
  ASSERT_EQ(m.cols(), 2u);
  // row = 2 q2 + q0, col = q1
  for (std::size_t q0 = 0; q0 < 2; ++q0)
    for (std::size_t q1 = 0; q1 < 2; ++q1)
      for (std::size_t q2 = 0; q2 < 2; ++q2) EXPECT_EQ(m(2 * q2 + q0, q1), complex(static_cast<double>(4 * q0 + 2 * q1 + q2)));

  const std::size_t all[] = {0, 1, 2};
  const std::size_t twice[] = {1, 1};
  EXPECT_THROW(bipartition_matrix(s, all), contract_error);
  EXPECT_THROW(bipartition_matrix(s, twice), contract_error);
  EXPECT_THROW(bipartition_matrix(s, std::span<const std::size_t>{}), contract_error);
}

TEST(BipartitionMatrix, ReducedStateEigenvaluesMatchCutSpectrum) {
  const auto state = ghz_graph_state(4, 2, 0.37);
  const std::size_t a[] = {0, 2};
  const auto ev = hermitian_eigenvalues(reduced_density_matrix(state, a));
  const auto spectrum = schmidt_spectrum(bipartition_matrix(state, a));
  for (std::size_t i = 0; i < ev.size(); ++i) EXPECT_NEAR(ev[i], spectrum.lambda[i], 1e-12);
}
