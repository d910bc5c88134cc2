#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "equibasis/entanglement.hpp"
#include "equibasis/gauss_basis.hpp"
#include "equibasis/gauss_sums.hpp"

using namespace equibasis;

namespace {

constexpr double pi = std::numbers::pi;

double gram_residual(const std::vector<BipartiteStateMatrix>& states) {
  double worst = 0.0;
  for (std::size_t a = 0; a < states.size(); ++a) {
    for (std::size_t b = 0; b < states.size(); ++b) {
      complex overlap{};
      for (std::size_t i = 0; i < states[a].data().size(); ++i) overlap += std::conj(states[a].data()[i]) * states[b].data()[i];
      worst = std::max(worst, std::abs(overlap - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

}  // namespace

TEST(Theorem1Phases, Examples) {
  const auto d2 = theorem1_phases(2).theta;
  ASSERT_EQ(d2.size(), 2u);
  EXPECT_DOUBLE_EQ(d2[0], 0.0);
  EXPECT_DOUBLE_EQ(d2[1], pi / 2);

  const auto d3 = theorem1_phases(3).theta;
  ASSERT_EQ(d3.size(), 3u);
  EXPECT_DOUBLE_EQ(d3[1], 2 * pi / 3);
  EXPECT_DOUBLE_EQ(d3[2], 8 * pi / 3);  // not reduced modulo 2 pi

  EXPECT_EQ(theorem1_phases(1).theta, std::vector<double>{0.0});
  EXPECT_THROW(theorem1_phases(0), contract_error);
}

TEST(Amplitudes, ProductBasisAtZero) {
  for (std::size_t D = 1; D <= 12; ++D) {
    const auto a = amplitudes(theorem1_phases(D), 0.0).a;
    for (std::size_t k = 0; k < D; ++k) EXPECT_NEAR(std::abs(a[k] - (k == 0 ? 1.0 : 0.0)), 0.0, 1e-15);
  }
}

TEST(Amplitudes, ArbitraryPhasesAtZeroGiveDelta) {
  const PhaseVector phases{{0.3, -2.0, 17.0, 4.5}};
  const auto a = amplitudes(phases, 0.0).a;
  EXPECT_NEAR(std::abs(a[0] - 1.0), 0.0, 1e-15);
  for (std::size_t k = 1; k < 4; ++k) EXPECT_NEAR(std::abs(a[k]), 0.0, 1e-15);
}

TEST(Amplitudes, MatchClosedFormAtOne) {
  for (std::size_t D : {2u, 3u, 8u, 51u, 100u}) {
    const auto a = amplitudes(theorem1_phases(D), 1.0).a;
    for (std::size_t k = 0; k < D; ++k)
      EXPECT_LT(std::abs(a[k] - closed_form_ak1(static_cast<std::int64_t>(D), static_cast<std::int64_t>(k))), 1e-10);
  }
}

TEST(Amplitudes, DimensionFiveIsFlatAtOne) {
  for (const auto& a : amplitudes(theorem1_phases(5), 1.0).a) EXPECT_NEAR(std::abs(a), 1.0 / std::sqrt(5.0), 1e-12);
}

TEST(Amplitudes, RejectsBadParameter) {
  const PhaseVector phases = theorem1_phases(3);
  EXPECT_THROW(amplitudes(phases, std::numeric_limits<double>::quiet_NaN()), contract_error);
  EXPECT_THROW(amplitudes(phases, 1.5), contract_error);
  EXPECT_THROW(amplitudes(phases, -0.1), contract_error);
}

TEST(Amplitudes, NormalizedForAnyT) {
  for (std::size_t D = 1; D <= 30; ++D)
    for (double t : {0.0, 0.13, 0.5, 0.77, 1.0}) EXPECT_NEAR(amplitudes(theorem1_phases(D), t).norm_squared(), 1.0, 1e-12);
}

TEST(OrthonormalityResidual, Examples) {
  EXPECT_EQ(orthonormality_residual(CoefficientVector{{1.0, 0.0, 0.0}}), 0.0);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(orthonormality_residual(CoefficientVector{{h, h, 0.0, 0.0}}), 0.5, 1e-15);
}

TEST(OrthonormalityResidual, TheoremFamilyIsOrthonormal) {
  for (std::size_t D = 1; D <= 50; ++D)
    for (int i = 0; i <= 10; ++i) ASSERT_LT(orthonormality_residual(amplitudes(theorem1_phases(D), i / 10.0)), 1e-10);
}

TEST(BasisState, Examples) {
  const CoefficientVector delta{{1.0, 0.0}};
  const auto s00 = basis_state(delta, 0, 0);
  EXPECT_EQ(s00(0, 0), complex(1.0));
  EXPECT_EQ(s00(1, 1), complex(0.0));

  // X (x) X |00> = |11>
  const auto s10 = basis_state(delta, 1, 0);
  EXPECT_EQ(s10(1, 1), complex(1.0));
  EXPECT_EQ(s10(0, 0), complex(0.0));

  EXPECT_THROW(basis_state(delta, 2, 0), contract_error);
  EXPECT_THROW(basis_state(delta, 0, 2), contract_error);
}

TEST(BasisState, ShiftPlacesEachAmplitude) {
  const CoefficientVector a{{1.0, 2.0, 3.0}};
  const auto s = basis_state(a, 2, 1);
  // a_k sits at (k+2, k+3) mod 3.
  EXPECT_EQ(s(2, 0), complex(1.0));
  EXPECT_EQ(s(0, 1), complex(2.0));
  EXPECT_EQ(s(1, 2), complex(3.0));
}

TEST(GaussFamily, GramMatrixIsIdentityAtSevenTenths) {
  EXPECT_LT(gram_residual(gauss_family({3, 0.7, Construction::gauss})), 1e-10);
}

TEST(GaussFamily, GramMatrixIsIdentityUpToTwelve) {
  for (std::size_t D = 1; D <= 12; ++D)
    for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) ASSERT_LT(gram_residual(gauss_family({D, t, Construction::gauss})), 1e-10);
}

TEST(GaussFamily, EndpointsAreProductAndMaximallyEntangled) {
  for (std::size_t D : {2u, 3u, 5u, 8u}) {
    for (const auto& s : gauss_family({D, 0.0, Construction::gauss})) {
      const auto spectrum = schmidt_spectrum(s);
      EXPECT_NEAR(spectrum.lambda[0], 1.0, 1e-15);
      EXPECT_NEAR(spectrum.lambda[1], 0.0, 1e-15);
    }
    for (const auto& s : gauss_family({D, 1.0, Construction::gauss}))
      EXPECT_NEAR(entropy_of_entanglement(schmidt_spectrum(s)), 1.0, 1e-10);
  }
}

TEST(GaussFamily, RejectsGraphConstruction) {
  EXPECT_THROW(gauss_family({3, 0.5, Construction::graph}), contract_error);
}

TEST(GaussFamily, SpectrumIsShiftInvariant) {
  for (std::size_t D = 2; D <= 9; ++D) {
    for (double t : {0.1, 0.45, 0.9}) {
      const auto states = gauss_family({D, t, Construction::gauss});
      const auto reference = schmidt_spectrum(states.front());
      for (const auto& s : states) ASSERT_LT(spectrum_distance(reference, schmidt_spectrum(s)), 1e-10);
    }
  }
}

TEST(GaussFamily, AmplitudesAreLipschitzInT) {
  const double h = 1e-6;
  for (std::size_t D = 2; D <= 20; ++D) {
    const PhaseVector phases = theorem1_phases(D);
    const double bound = *std::max_element(phases.theta.begin(), phases.theta.end());
    for (int i = 0; i < 10; ++i) {
      const double t = i / 10.0;
      const auto a = amplitudes(phases, t).a, b = amplitudes(phases, t + h).a;
      double step = 0.0;
      for (std::size_t k = 0; k < D; ++k) step += std::norm(b[k] - a[k]);
      EXPECT_LE(std::sqrt(step), bound * h * (1.0 + 1e-6));
    }
  }
}

TEST(GaussFamily, DimensionEightHasInteriorZeros) {
  // Oracle: scan a fine grid for the smallest |a_k(t)| per k, then refine by golden section.
  const PhaseVector phases = theorem1_phases(8);
  auto magnitude = [&](std::size_t k, double t) { return std::abs(amplitudes(phases, t).a[k]); };
  double best = 1.0;
  for (std::size_t k = 1; k < 8; ++k) {
    double t_best = 0.5, v_best = 1.0;
    for (int i = 50; i < 1000; ++i) {
      const double t = i / 1000.0;
      if (magnitude(k, t) < v_best) v_best = magnitude(k, t), t_best = t;
    }
    double lo = std::max(0.05, t_best - 1e-3), hi = std::min(0.999, t_best + 1e-3);
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int it = 0; it < 80; ++it) {
      const double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
      if (magnitude(k, x1) < magnitude(k, x2)) hi = x2; else lo = x1;
    }
    best = std::min(best, magnitude(k, 0.5 * (lo + hi)));
  }
  EXPECT_LT(best, 1e-3);
}
