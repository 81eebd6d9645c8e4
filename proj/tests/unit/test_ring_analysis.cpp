#include <gtest/gtest.h>

#include <cmath>

#include "brl/annulus_green.hpp"
#include "brl/constants.hpp"
#include "brl/errors.hpp"
#include "brl/interaction.hpp"
#include "brl/ring_analysis.hpp"
#include "oracles.hpp"

namespace brl {
namespace {

const AnnulusGeometry kHalf(0.5);

TEST(RingConfig, PointsOnCircle) {
  const std::vector<Vec4> pts = RingConfig{6, 0.8}.points();
  ASSERT_EQ(pts.size(), 6u);
  EXPECT_EQ(pts[0], Vec4(0.8, 0, 0, 0));
  for (const auto& p : pts) EXPECT_NEAR(norm(p), 0.8, 1e-15);
  EXPECT_NEAR(distance(pts[0], pts[3]), 1.6, 1e-15);
}

TEST(CirculantCoeffs, FourPointRingAgainstLongSeries) {
  // Frozen from the 2000-term reference sums.
  constexpr double tau = 0.17323653234411396;
  constexpr double g_perp = 0.00037841504409990429;
  constexpr double g_anti = 2.775858752636709e-06;
  const RingConfig ring{4, 0.7};
  const std::vector<Vec4> pts = ring.points();
  EXPECT_NEAR(oracle::green_reference(pts[0], pts[1], 0.5, 2000), g_perp, 1e-15);
  const CirculantCoeffs c = circulant_coeffs(ring, kHalf, SeriesControl{});
  ASSERT_EQ(c.a.size(), 4u);
  EXPECT_NEAR(c.a[0], tau, 1e-10);
  EXPECT_NEAR(c.a[1], -g_perp, 1e-10);
  EXPECT_NEAR(c.a[2], -g_anti, 1e-10);
  EXPECT_NEAR(c.a[3], -g_perp, 1e-10);
  EXPECT_FALSE(c.degraded);
  EXPECT_LE(c.tail_bound, 1e-9);
}

TEST(CirculantCoeffs, ReflectionIdentity) {
  for (double r : {0.55, 0.7, 0.9}) {
    const CirculantCoeffs c = circulant_coeffs(RingConfig{5, r}, kHalf, SeriesControl{});
    EXPECT_NEAR(c.a[1], c.a[4], 1e-12);
    EXPECT_NEAR(c.a[2], c.a[3], 1e-12);
  }
}

TEST(CirculantCoeffs, RejectsBadRings) {
  EXPECT_THROW(circulant_coeffs(RingConfig{1, 0.7}, kHalf, SeriesControl{}), DomainError);
  EXPECT_THROW(circulant_coeffs(RingConfig{3, 0.4}, kHalf, SeriesControl{}), DomainError);
  EXPECT_THROW(circulant_coeffs(RingConfig{3, 1.0}, kHalf, SeriesControl{}), DomainError);
}

TEST(CirculantEigs, TwoByTwo) {
  const std::vector<double> ev = circulant_eigs({0.3, -0.1});
  ASSERT_EQ(ev.size(), 2u);
  EXPECT_DOUBLE_EQ(ev[0], 0.2);
  EXPECT_DOUBLE_EQ(ev[1], 0.4);
}

TEST(CirculantEigs, AsymmetricCoefficientsRejected) {
  EXPECT_THROW(circulant_eigs({1.0, 2.0, 3.0}), SymmetryError);
}

TEST(CirculantEigs, MatchDenseEigensolver) {
  for (double rho : {0.3, 0.5, 0.7}) {
    const AnnulusGeometry geom(rho);
    // Dense assembly with the same truncation ceiling the ring code escalates to.
    const AnnulusOracle o(geom, SeriesControl{kMaxTermsCap, 1e-10});
    for (std::size_t k = 2; k <= 8; ++k)
      for (double frac : {0.2, 0.5, 0.8}) {
        const RingConfig ring{k, rho + frac * (1.0 - rho)};
        std::vector<double> ev = circulant_eigs(circulant_coeffs(ring, geom, SeriesControl{}).a);
        const SpectralData s = smallest_eigen(assemble_m(ring.configuration(), o));
        for (std::size_t l = 1; l < k; ++l) EXPECT_GT(ev[l], ev[0]);
        std::sort(ev.begin(), ev.end());
        ASSERT_EQ(ev.size(), s.spectrum.size());
        for (std::size_t l = 0; l < k; ++l)
          EXPECT_NEAR(ev[l], s.spectrum[l], 1e-10) << "k=" << k << " rho=" << rho;
      }
  }
}

TEST(Lambda1Ring, PairIsRobinMinusGreen) {
  const EvalResult l = lambda1_ring(RingConfig{2, 0.7}, kHalf, SeriesControl{});
  EXPECT_NEAR(l.value, 0.17323653234411396 - 2.775858752636709e-06, 1e-10);
  const AnnulusOracle o(kHalf);
  for (std::size_t k : {3u, 6u}) {
    const RingConfig ring{k, 0.77};
    EXPECT_NEAR(lambda1_ring(ring, kHalf, SeriesControl{}).value,
                smallest_eigen(assemble_m(ring.configuration(), o)).lambda1, 1e-10);
  }
}

TEST(Lambda1Ring, BlowsUpAtBothWalls) {
  const RingScan scan = min_over_r(2, kHalf, SeriesControl{});
  const double inner = lambda1_ring(RingConfig{2, 0.5 + 1e-3}, kHalf, SeriesControl{}).value;
  const double outer = lambda1_ring(RingConfig{2, 1.0 - 1e-3}, kHalf, SeriesControl{}).value;
  EXPECT_GE(inner, 10.0 * scan.min_value);
  EXPECT_GE(outer, 10.0 * scan.min_value);
  EXPECT_GT(scan.lambda_by_ell[0].front(), scan.min_value + 1.0);
  EXPECT_GT(scan.lambda_by_ell[0].back(), scan.min_value + 1.0);
}

TEST(DefaultGrid, IncreasingInsideAnnulus) {
  const std::vector<double> grid = default_r_grid(0.3, 512);
  ASSERT_EQ(grid.size(), 512u);
  EXPECT_GT(grid.front(), 0.3);
  EXPECT_LT(grid.back(), 1.0);
  for (std::size_t i = 1; i < grid.size(); ++i) EXPECT_GT(grid[i], grid[i - 1]);
  // Denser near the walls than in the middle.
  EXPECT_LT(grid[1] - grid[0], grid[256] - grid[255]);
  EXPECT_LT(grid[511] - grid[510], grid[256] - grid[255]);
}

TEST(MinOverR, PairOnHalfAnnulus) {
  const RingScan scan = min_over_r(2, kHalf, SeriesControl{});
  EXPECT_GT(scan.min_value, 0.0);
  EXPECT_NEAR(scan.argmin_r, 0.729948030951, 1e-8);
  EXPECT_LE(scan.min_tail, 1e-8);
  EXPECT_EQ(scan.lambda_by_ell.size(), 2u);
  for (std::size_t i = 0; i < scan.r_grid.size(); ++i)
    EXPECT_LT(scan.lambda_by_ell[0][i], scan.lambda_by_ell[1][i]);
  EXPECT_TRUE(scan.g_perp_series.empty());
}

TEST(MinOverR, GridRefinementMovesArgminByLessThanACell) {
  ScanOptions coarse;
  coarse.grid_points = 64;
  ScanOptions fine;
  fine.grid_points = 128;
  const RingScan a = min_over_r(3, kHalf, SeriesControl{}, coarse);
  const RingScan b = min_over_r(3, kHalf, SeriesControl{}, fine);
  const std::size_t i = a.grid_argmin;
  const double cell = std::max(a.r_grid[i + 1] - a.r_grid[i], a.r_grid[i] - a.r_grid[i - 1]);
  EXPECT_LE(std::abs(a.argmin_r - b.argmin_r), cell);
  EXPECT_NEAR(a.min_value, b.min_value, 1e-12);
}

TEST(MinOverR, MonotoneWindowIsScanError) {
  ScanOptions opts;
  opts.r_grid = {0.55, 0.56, 0.57, 0.58, 0.59, 0.6};
  EXPECT_THROW(min_over_r(2, kHalf, SeriesControl{}, opts), ScanError);
  EXPECT_THROW(min_over_r(1, kHalf, SeriesControl{}), DomainError);
}

TEST(MinOverR, FourPointRingCarriesBothPerpendicularValues) {
  ScanOptions opts;
  opts.grid_points = 128;
  const RingScan scan = min_over_r(4, kHalf, SeriesControl{}, opts);
  ASSERT_EQ(scan.g_perp_series.size(), scan.r_grid.size());
  ASSERT_EQ(scan.g_perp_shortcut.size(), scan.r_grid.size());
  ASSERT_EQ(scan.lambda1_shortcut.size(), scan.r_grid.size());
  for (std::size_t i = 0; i < scan.r_grid.size(); ++i) {
    const double r = scan.r_grid[i];
    EXPECT_DOUBLE_EQ(scan.g_perp_shortcut[i], 1.0 / (4.0 * constants::omega * r * r));
  }
  EXPECT_GT(scan.min_value, 0.0);
}

TEST(PerpendicularDiagnostic, SeriesDiffersFromSingularPart) {
  const PerpendicularSample s = perpendicular_diagnostic(0.7, kHalf, SeriesControl{});
  EXPECT_NEAR(s.g_series, 0.00037841504409990429, 1e-10);
  EXPECT_DOUBLE_EQ(s.g_shortcut, 1.0 / (4.0 * constants::omega * 0.49));
  const EvalResult h = regular_part(Vec4(0.7, 0, 0, 0), Vec4(0, 0.7, 0, 0), kHalf, SeriesControl{});
  EXPECT_NEAR(s.difference, -h.value, 1e-14);
  EXPECT_GT(std::abs(s.difference), 100.0 * s.tail_bound);
}

TEST(PerpendicularReport, FourPointRingOnHalfAnnulus) {
  const RingScan scan = min_over_r(4, kHalf, SeriesControl{});
  const PerpendicularReport rep = perpendicular_report(scan, kHalf, SeriesControl{});
  EXPECT_EQ(rep.samples.size(), scan.r_grid.size());
  EXPECT_FALSE(rep.shortcut_agrees);
  EXPECT_NE(rep.summary.find("DISCREPANCY"), std::string::npos);
  EXPECT_TRUE(rep.positivity_confirmed);
  EXPECT_GT(rep.min_lambda1_series, 0.0);
  EXPECT_NEAR(rep.min_lambda1_series, scan.min_value, 1e-12);
  EXPECT_NE(rep.min_lambda1_shortcut, rep.min_lambda1_series);
}

TEST(SufficientCondition, InequalityRanges) {
  for (double r : default_r_grid(0.1, 256)) EXPECT_TRUE(sufficient_inequality(2, 0.1, r)) << r;
  for (double r : default_r_grid(0.5, 256)) EXPECT_TRUE(sufficient_inequality(4, 0.5, r)) << r;
  bool any_false = false;
  for (double r : default_r_grid(0.05, 256)) any_false = any_false || !sufficient_inequality(2, 0.05, r);
  EXPECT_TRUE(any_false);
  EXPECT_THROW(sufficient_inequality(3, 0.5, 0.7), DomainError);
}

TEST(SufficientCondition, InequalityMatchesRationalForm) {
  for (double rho : {0.05, 0.2, 0.6})
    for (double frac : {0.1, 0.4, 0.9}) {
      const double r = rho + frac * (1.0 - rho);
      const double lhs = (8 * rho * rho - 16 * rho * rho * r * r + 8 * std::pow(r, 4)) /
                         (std::pow(r, 4) * (1 - rho * rho));
      EXPECT_EQ(sufficient_inequality(2, rho, r), lhs > 1.0 / (r * r));
      EXPECT_EQ(sufficient_inequality(4, rho, r), lhs > 5.0 / (r * r));
    }
}

TEST(SufficientCondition, BoundChainHolds) {
  for (auto [k, rho] : {std::pair<std::size_t, double>{2, 0.1}, {2, 0.05}, {4, 0.5}, {4, 0.3}}) {
    const SufficientConditionReport rep =
        sufficient_condition_check(k, rho, default_r_grid(rho, 128), SeriesControl{});
    EXPECT_EQ(rep.chain_violations, 0u) << k << " " << rho;
    for (std::size_t i = 0; i < rep.r_grid.size(); ++i)
      if (rep.inequality[i]) EXPECT_GT(rep.lower_bound[i], 0.0);
  }
  EXPECT_TRUE(sufficient_condition_check(2, 0.1, default_r_grid(0.1, 64), SeriesControl{}).all_hold);
  EXPECT_FALSE(sufficient_condition_check(2, 0.05, default_r_grid(0.05, 64), SeriesControl{}).all_hold);
}

TEST(Threshold, PairThresholdInNarrowWindow) {
  ThresholdOptions opts;
  opts.rho_lo = 0.05;
  opts.rho_hi = 0.08;
  opts.tol = 1e-3;
  opts.scan.grid_points = 128;
  const ThresholdResult th = threshold_rho(2, SeriesControl{}, opts);
  EXPECT_FALSE(th.one_signed);
  EXPECT_LE(th.bracket_width, 1e-3);
  EXPECT_LE(th.min_at_lo, 0.0);
  EXPECT_GT(th.min_at_hi, 0.0);
  EXPECT_LE(th.rho_star, 1.0 / 15.0 + 1e-3);
}

TEST(Threshold, OneSignedRangeIsReported) {
  ThresholdOptions opts;
  opts.rho_lo = 0.3;
  opts.rho_hi = 0.6;
  opts.scan.grid_points = 64;
  const ThresholdResult th = threshold_rho(2, SeriesControl{}, opts);
  EXPECT_TRUE(th.one_signed);
  EXPECT_EQ(th.sign, 1);
}

}  // namespace
}  // namespace brl
