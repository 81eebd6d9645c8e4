#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>

#include "brl/annulus_green.hpp"
#include "brl/constants.hpp"
#include "brl/errors.hpp"
#include "oracles.hpp"

namespace brl {
namespace {

const AnnulusGeometry kHalf(0.5);

Vec4 random_point(std::mt19937_64& rng, double r_lo, double r_hi) {
  std::normal_distribution<double> n01;
  std::uniform_real_distribution<double> u(r_lo, r_hi);
  Vec4 v(n01(rng), n01(rng), n01(rng), n01(rng));
  return v * (u(rng) / norm(v));
}

TEST(Constants, Relations) {
  EXPECT_DOUBLE_EQ(constants::omega, 2.0 * std::numbers::pi * std::numbers::pi);
  EXPECT_DOUBLE_EQ(constants::alpha4, 2.0 * std::sqrt(2.0));
  EXPECT_NEAR(constants::frak_c, 8.0 * std::sqrt(2.0) * std::numbers::pi * std::numbers::pi,
              4.0 * std::numeric_limits<double>::epsilon() * constants::frak_c);
  EXPECT_NEAR(constants::frak_c, 2.0 * constants::alpha4 * constants::omega,
              std::numeric_limits<double>::epsilon() * constants::frak_c);
  EXPECT_DOUBLE_EQ(constants::rate_scale, 4.0 * constants::omega);
}

TEST(Geometry, RejectsInvalidInnerRadius) {
  EXPECT_THROW(AnnulusGeometry(0.0), DomainError);
  EXPECT_THROW(AnnulusGeometry(1.0), DomainError);
  EXPECT_THROW(AnnulusGeometry(-0.2), DomainError);
  EXPECT_NO_THROW(AnnulusGeometry(0.3));
}

TEST(Geometry, BoundaryDistance) {
  EXPECT_DOUBLE_EQ(kHalf.boundary_distance({0.7, 0, 0, 0}), 0.2);
  EXPECT_DOUBLE_EQ(kHalf.boundary_distance({0, 0, 0.9, 0}), 1.0 - 0.9);
  EXPECT_LT(kHalf.boundary_distance({0.3, 0, 0, 0}), 0.0);
  EXPECT_TRUE(kHalf.contains({0.7, 0, 0, 0}));
  EXPECT_FALSE(kHalf.contains({1.0, 0, 0, 0}));
  EXPECT_TRUE(kHalf.contains_closed({1.0, 0, 0, 0}));
}

TEST(RadialCoefficient, DiagonalAtSevenTenths) {
  // Frozen from the unsimplified rational expression in long double.
  constexpr double frozen = 0.68054977092877968;
  EXPECT_NEAR(static_cast<double>(oracle::q_m_rational(0, 0.7L, 0.7L, 0.5L)), frozen, 1e-16);
  EXPECT_NEAR(q_m_diag(0, 0.7, kHalf), frozen, 1e-15);
  EXPECT_NEAR(q_m_pair(0, 0.7, 0.7, kHalf), frozen, 1e-15);
}

TEST(RadialCoefficient, PairReducesToDiagonal) {
  for (int m : {0, 1, 4, 17, 80})
    for (double s : {0.51, 0.6, 0.75, 0.99}) EXPECT_EQ(q_m_pair(m, s, s, kHalf), q_m_diag(m, s, kHalf));
}

TEST(RadialCoefficient, OuterLimit) {
  // As s -> 1 the coefficient tends to t^m/(2m+2); for m = 0 that is 1/2.
  constexpr double frozen = 0.50000000592592601;
  EXPECT_NEAR(q_m_pair(0, 1.0 - 1e-8, 0.6, kHalf), frozen, 1e-13);
  EXPECT_NEAR(q_m_pair(0, 1.0 - 1e-8, 0.6, kHalf), 0.5, 1e-7);
  EXPECT_NEAR(q_m_pair(3, 1.0 - 1e-10, 0.6, kHalf), std::pow(0.6, 3) / 8.0, 1e-8);
}

TEST(RadialCoefficient, SquareRootOfInnerRadius) {
  const AnnulusGeometry g(0.25);
  const double s = std::sqrt(0.25);
  constexpr double frozen = 0.8;  // long double rational oracle
  EXPECT_NEAR(static_cast<double>(oracle::q_m_rational(0, 0.5L, 0.5L, 0.25L)), frozen, 1e-16);
  EXPECT_NEAR(q_m_diag(0, s, g), frozen, 1e-15);
  EXPECT_NEAR(q_m_pair(0, s, s, g), q_m_diag(0, s, g), 0.0);
}

TEST(RadialCoefficient, MatchesRationalFormAndIsSymmetric) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> rr(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double rho = 0.05 + 0.9 * rr(rng);
    const AnnulusGeometry g(rho);
    const double s = rho + (1 - rho) * (0.02 + 0.96 * rr(rng));
    const double t = rho + (1 - rho) * (0.02 + 0.96 * rr(rng));
    const int m = static_cast<int>(rr(rng) * 40);
    const double ref = static_cast<double>(oracle::q_m_rational(m, s, t, rho));
    EXPECT_NEAR(q_m_pair(m, s, t, g), ref, 1e-12 * std::abs(ref) + 1e-300);
    EXPECT_NEAR(q_m_pair(m, s, t, g), q_m_pair(m, t, s, g), 1e-13 * std::abs(ref) + 1e-300);
  }
}

TEST(RadialCoefficient, DiagonalIsNonnegative) {
  for (double rho : {0.1, 0.5, 0.9}) {
    const AnnulusGeometry g(rho);
    for (int m = 0; m < 60; m += 3)
      for (int i = 1; i < 50; ++i) EXPECT_GE(q_m_diag(m, rho + (1 - rho) * i / 50.0, g), 0.0);
  }
}

TEST(RadialCoefficient, RejectsRadiiOutsideOpenAnnulus) {
  EXPECT_THROW(q_m_pair(0, 0.5, 0.7, kHalf), DomainError);
  EXPECT_THROW(q_m_pair(0, 0.7, 1.0, kHalf), DomainError);
  EXPECT_THROW(q_m_diag(0, 1.2, kHalf), DomainError);
  EXPECT_THROW(q_m_diag(-1, 0.7, kHalf), DomainError);
}

TEST(Green, PerpendicularPairMatchesLongSeries) {
  // 2000-term reference from the independent rational/trigonometric sum.
  constexpr double frozen = 0.00037841504409990429;
  const Vec4 x(0.7, 0, 0, 0), y(0, 0.7, 0, 0);
  EXPECT_NEAR(oracle::green_reference(x, y, 0.5, 2000), frozen, 1e-18);
  const EvalResult r = green(x, y, kHalf, SeriesControl{});
  EXPECT_FALSE(r.degraded);
  EXPECT_LE(r.tail_bound, 1e-10);
  EXPECT_NEAR(r.value, frozen, 1e-10);
}

TEST(Green, Symmetric) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Vec4 x = random_point(rng, 0.52, 0.98), y = random_point(rng, 0.52, 0.98);
    if (distance(x, y) < 1e-3) continue;
    const double a = green(x, y, kHalf, {}).value;
    const double b = green(y, x, kHalf, {}).value;
    EXPECT_NEAR(a, b, 1e-12 * std::max(1.0, std::abs(a)));
  }
}

TEST(Green, PositiveInside) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    const Vec4 x = random_point(rng, 0.51, 0.99), y = random_point(rng, 0.51, 0.99);
    if (distance(x, y) < 1e-3) continue;
    EXPECT_GT(green(x, y, kHalf, {}).value, 0.0);
  }
}

TEST(Green, TailBoundDominatesTrueTail) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const double rho = 0.2 + 0.6 * u(rng);
    const AnnulusGeometry g(rho);
    const double w = 1.0 - rho;
    const Vec4 x = random_point(rng, rho + 0.1 * w, 1.0 - 0.1 * w);
    const Vec4 y = random_point(rng, rho + 0.1 * w, 1.0 - 0.1 * w);
    if (distance(x, y) < 1e-2) continue;
    for (int terms : {5, 20, 200}) {
      const EvalResult r = regular_part(x, y, g, SeriesControl{terms, 1e-300});
      const double ref = oracle::regular_part_reference(x, y, rho, 2000);
      EXPECT_LE(std::abs(r.value - ref), r.tail_bound + 1e-14) << "terms=" << terms;
    }
  }
}

TEST(Green, ReportsDegradedAccuracy) {
  const Vec4 x(0.999, 0, 0, 0), y(0, 0.998, 0, 0);
  const EvalResult r = green(x, y, kHalf, SeriesControl{16, 1e-10});
  EXPECT_TRUE(r.degraded);
  EXPECT_EQ(r.terms_used, 16);
  EXPECT_GT(r.tail_bound, 1e-10);
  const EvalResult fine = green(x, y, kHalf, SeriesControl{100000, 1e-10});
  EXPECT_FALSE(fine.degraded);
  EXPECT_LE(fine.tail_bound, 1e-10);
}

TEST(Green, VanishesOnBothBoundarySpheres) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const Vec4 y = random_point(rng, 0.55, 0.95);
    Vec4 dir = random_point(rng, 1.0, 1.0);
    for (double radius : {1.0, 0.5}) {
      const EvalResult r = green(dir * radius, y, kHalf, {});
      EXPECT_LE(std::abs(r.value), 10.0 * r.tail_bound + 1e-14) << "radius=" << radius;
    }
  }
}

TEST(Green, VanishesLinearlyTowardBoundary) {
  // Hopf: G ~ distance * normal derivative, so the ratio over a decade is 10.
  const Vec4 y(0.7, 0, 0, 0), dir(0.6, 0.8, 0, 0);
  const double g3 = green(dir * (1.0 - 1e-3), y, kHalf, {}).value;
  const double g4 = green(dir * (1.0 - 1e-4), y, kHalf, {}).value;
  EXPECT_GT(g3, 0.0);
  EXPECT_NEAR(g3 / g4, 10.0, 0.05);
}

TEST(Green, RegularPartIsHarmonic) {
  const Vec4 y(0.0, 0.7, 0.0, 0.1);
  std::mt19937_64 rng(9);
  const SeriesControl tight{2000, 1e-14};
  for (int i = 0; i < 10; ++i) {
    const Vec4 x = random_point(rng, 0.6, 0.9);
    if (distance(x, y) < 0.2) continue;
    const double lap = oracle::fd_laplacian(
        [&](const Vec4& p) { return regular_part(p, y, kHalf, tight).value; }, x, 1e-3);
    EXPECT_LE(std::abs(lap), 1e-2);
  }
}

TEST(Green, RegularPartOnDiagonalIsRobin) {
  const Vec4 x(0.0, 0.0, 0.7, 0.0);
  const Vec4 y(1e-4, 0.0, 0.7, 0.0);
  const double h = 1.0 / (2.0 * constants::omega * norm2(x - y)) - green(x, y, kHalf, {}).value;
  EXPECT_NEAR(h, robin(x, kHalf, {}).value, 1e-6);
}

TEST(Green, DomainAndSingularityErrors) {
  EXPECT_THROW(green({0.7, 0, 0, 0}, {0.7, 0, 0, 0}, kHalf, {}), SingularityError);
  EXPECT_THROW(green({0.7, 0, 0, 0}, {0.7 + 1e-9, 0, 0, 0}, kHalf, {}), SingularityError);
  EXPECT_THROW(green({0.4, 0, 0, 0}, {0.7, 0, 0, 0}, kHalf, {}), DomainError);
  EXPECT_THROW(green({1.1, 0, 0, 0}, {0.7, 0, 0, 0}, kHalf, {}), DomainError);
  // Both points on the outer sphere: the series does not converge.
  EXPECT_THROW(green({1.0, 0, 0, 0}, {0, 1.0, 0, 0}, kHalf, {}), DomainError);
  EXPECT_THROW(green({0.7, 0, 0, 0}, {0, 0.7, 0, 0}, kHalf, SeriesControl{0, 1e-10}), DomainError);
  static_assert(std::is_base_of_v<DomainError, SingularityError>);
}

TEST(Robin, RadialInvariance) {
  EXPECT_EQ(robin({0.7, 0, 0, 0}, kHalf, {}).value, robin({0, 0, 0.7, 0}, kHalf, {}).value);
}

TEST(Robin, MatchesLongSeries) {
  constexpr double frozen = 0.17323653234411396;
  EXPECT_NEAR(oracle::robin_reference(0.7, 0.5, 2000), frozen, 1e-16);
  const EvalResult r = robin({0.7, 0, 0, 0}, kHalf, {});
  EXPECT_NEAR(r.value, frozen, 1e-10);
  EXPECT_LE(std::abs(r.value - frozen), r.tail_bound + 1e-15);
}

TEST(Robin, GrowsTowardBothWalls) {
  EXPECT_GT(robin_radial(0.9, kHalf, {}).value, robin_radial(0.707, kHalf, {}).value);
  const double mid = robin_radial(0.72, kHalf, {}).value;
  EXPECT_GT(robin_radial(0.5 + 1e-3, kHalf, {100000, 1e-10}).value, 100.0 * mid);
  EXPECT_GT(robin_radial(1.0 - 1e-3, kHalf, {100000, 1e-10}).value, 100.0 * mid);
  EXPECT_THROW(robin_radial(1.0, kHalf, {}), DomainError);
}

TEST(Robin, RadialDerivativeChangesSignOnce) {
  int changes = 0;
  double prev = 0.0;
  for (int i = 1; i < 100; ++i) {
    const double s = 0.5 + 0.5 * i / 100.0;
    const double d = robin_radial_derivative(s, kHalf, {20000, 1e-10}).value;
    if (i > 1 && (d > 0) != (prev > 0)) ++changes;
    prev = d;
  }
  EXPECT_EQ(changes, 1);
  EXPECT_LT(robin_radial_derivative(0.6, kHalf, {}).value, 0.0);
  EXPECT_GT(robin_radial_derivative(0.85, kHalf, {}).value, 0.0);
}

TEST(GradRobin, TangentialComponentsVanish) {
  const GradResult g = grad_robin({0.7, 0, 0, 0}, kHalf, {});
  EXPECT_EQ(g.gradient[1], 0.0);
  EXPECT_EQ(g.gradient[2], 0.0);
  EXPECT_EQ(g.gradient[3], 0.0);
}

TEST(GradRobin, MatchesFiniteDifferences) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 20; ++i) {
    const Vec4 x = random_point(rng, 0.55, 0.95);
    const GradResult g = grad_robin(x, kHalf, {});
    for (std::size_t a = 0; a < 4; ++a) {
      const double fd = oracle::richardson_derivative(
          [&](double v) {
            Vec4 p = x;
            p[a] = v;
            return robin(p, kHalf, {2000, 1e-14}).value;
          },
          x[a], 1e-4);
      EXPECT_NEAR(g.gradient[a], fd, 1e-5 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST(GradGreen, MatchesFiniteDifferences) {
  std::mt19937_64 rng(12);
  for (double rho : {0.3, 0.5, 0.7}) {
    const AnnulusGeometry g(rho);
    const double w = 1.0 - rho;
    for (int i = 0; i < 15; ++i) {
      const Vec4 x = random_point(rng, rho + 0.1 * w, 1.0 - 0.1 * w);
      const Vec4 y = random_point(rng, rho + 0.1 * w, 1.0 - 0.1 * w);
      if (distance(x, y) < 0.1) continue;
      const GradResult an = grad_green(x, y, g, {20000, 1e-10});
      EXPECT_FALSE(an.degraded);
      Vec4 fd;
      for (std::size_t a = 0; a < 4; ++a)
        fd[a] = oracle::richardson_derivative(
            [&](double v) {
              Vec4 p = x;
              p[a] = v;
              return green(p, y, g, {4000, 1e-14}).value;
            },
            x[a], 1e-5);
      EXPECT_LE(norm(an.gradient - fd), 1e-5 * std::max(1.0, norm(fd)));
    }
  }
}

TEST(GradGreen, AntipodalGradientIsRadial) {
  const Vec4 x(0.3, 0.4, 0.2, 0.5);
  const GradResult g = grad_green(x, -x, kHalf, {});
  const Vec4 xhat = x * (1.0 / norm(x));
  const Vec4 perp = g.gradient - dot(g.gradient, xhat) * xhat;
  EXPECT_LE(norm(perp), 1e-12 * norm(g.gradient));
}

TEST(SeriesControl, EnvironmentOverride) {
  ::setenv("BRL_MAX_TERMS", "777", 1);
  EXPECT_EQ(default_series_control().max_terms, 777);
  ::setenv("BRL_MAX_TERMS", "abc", 1);
  EXPECT_THROW(default_series_control(), DomainError);
  ::setenv("BRL_MAX_TERMS", "0", 1);
  EXPECT_THROW(default_series_control(), DomainError);
  ::unsetenv("BRL_MAX_TERMS");
  EXPECT_EQ(default_series_control().max_terms, 200);
  EXPECT_EQ(default_series_control().target_tol, 1e-10);
}

TEST(AnnulusOracle, ForwardsToFreeFunctions) {
  const AnnulusOracle o(kHalf, SeriesControl{300, 1e-12});
  const Vec4 x(0.6, 0.1, 0, 0), y(0, 0, 0.8, 0.1);
  EXPECT_EQ(o.green(x, y).value, green(x, y, kHalf, {300, 1e-12}).value);
  EXPECT_EQ(o.robin(x).value, robin(x, kHalf, {300, 1e-12}).value);
  EXPECT_EQ(o.grad_green(x, y).gradient, grad_green(x, y, kHalf, {300, 1e-12}).gradient);
  EXPECT_EQ(o.grad_robin(x).gradient, grad_robin(x, kHalf, {300, 1e-12}).gradient);
  EXPECT_DOUBLE_EQ(o.boundary_distance(x), kHalf.boundary_distance(x));
  EXPECT_NE(o.describe().find("annulus"), std::string::npos);
}

}  // namespace
}  // namespace brl
