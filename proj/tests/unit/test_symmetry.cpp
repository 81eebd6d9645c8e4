#include <gtest/gtest.h>

#include <cmath>

#include "brl/annulus_green.hpp"
#include "brl/errors.hpp"
#include "brl/interaction.hpp"
#include "brl/ring_analysis.hpp"
#include "brl/symmetry.hpp"

namespace brl {
namespace {

TEST(SymmetryGroup, RingOrder) {
  for (std::size_t k = 2; k <= 7; ++k) EXPECT_EQ(SymmetryGroup::ring(k).order(), 8 * k) << k;
}

TEST(SymmetryGroup, RingPointsAreInvariant) {
  for (std::size_t k = 2; k <= 6; ++k) {
    const std::vector<Vec4> pts = RingConfig{k, 0.63}.points();
    const SymmetryGroup group = SymmetryGroup::ring(k);
    for (const auto& g : group.elements())
      for (std::size_t i = 0; i < k; ++i)
        EXPECT_LE(norm(g.apply(pts[i]) - pts[g.perm[i]]), 1e-14);
  }
}

TEST(SymmetryGroup, ProjectionIsIdempotentAndFixesRing) {
  const SymmetryGroup group = SymmetryGroup::ring(3);
  const std::vector<Vec4> v{Vec4(0.3, -0.1, 0.2, 0.5), Vec4(-0.4, 0.2, 0.1, 0.0),
                            Vec4(0.1, 0.6, -0.3, 0.2)};
  const std::vector<Vec4> p = group.project(v);
  const std::vector<Vec4> pp = group.project(p);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_LE(norm(p[i] - pp[i]), 1e-15);
  const std::vector<Vec4> ring = RingConfig{3, 0.7}.points();
  const std::vector<Vec4> pr = group.project(ring);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_LE(norm(pr[i] - ring[i]), 1e-15);
}

TEST(SymmetryGroup, InvariantSubspaceOfRingIsRadial) {
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto basis = SymmetryGroup::ring(k).invariant_basis();
    ASSERT_EQ(basis.size(), 1u) << k;
    const std::vector<Vec4> pts = RingConfig{k, 1.0}.points();
    const double scale = 1.0 / std::sqrt(static_cast<double>(k));
    double overlap = 0.0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t a = 0; a < 4; ++a) overlap += basis[0][4 * i + a] * pts[i][a] * scale;
    EXPECT_NEAR(std::abs(overlap), 1.0, 1e-12);
  }
}

TEST(SymmetryGroup, GradientAtRingIsInvariant) {
  const AnnulusGeometry geom(0.5);
  const AnnulusOracle o(geom);
  const Configuration c = RingConfig{4, 0.75}.configuration();
  const std::vector<Vec4> g = lambda1_gradient_by_point(c, o);
  const std::vector<Vec4> p = SymmetryGroup::ring(4).project(g);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_LE(norm(p[i] - g[i]), 1e-12 * (1.0 + norm(g[i])));
}

TEST(SymmetryGroup, RejectsBadGenerators) {
  EXPECT_THROW(SymmetryGroup::generate({}), DomainError);
  SymmetryElement bad;
  for (std::size_t i = 0; i < 4; ++i) bad.rotation[i][i] = 1.0;
  bad.perm = {0, 0};
  EXPECT_THROW(SymmetryGroup::generate({bad}), DomainError);
  SymmetryElement irrational;
  irrational.rotation[0][0] = std::cos(1.0);
  irrational.rotation[0][1] = -std::sin(1.0);
  irrational.rotation[1][0] = std::sin(1.0);
  irrational.rotation[1][1] = std::cos(1.0);
  irrational.rotation[2][2] = irrational.rotation[3][3] = 1.0;
  irrational.perm = {0};
  EXPECT_THROW(SymmetryGroup::generate({irrational}, 64), DomainError);
}

}  // namespace
}  // namespace brl
