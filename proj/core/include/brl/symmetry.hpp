#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "brl/vec4.hpp"

namespace brl {

// Orthogonal map of R^4 paired with a relabelling of the points: a
// configuration is invariant when rotation * xi_i == xi_{perm[i]}.
struct SymmetryElement {
  std::array<std::array<double, 4>, 4> rotation{};
  std::vector<std::size_t> perm;

  Vec4 apply(const Vec4& v) const;
  Vec4 apply_transpose(const Vec4& v) const;
};

class SymmetryGroup {
 public:
  // Closes the generators under composition.
  static SymmetryGroup generate(const std::vector<SymmetryElement>& generators,
                                std::size_t max_order = 4096);

  // Rotation by 2 pi/k in the (x1, x2) plane, reflection x2 -> -x2, and the
  // reflections of x3 and x4: the stabilizer of a regular k-gon ring.
  static SymmetryGroup ring(std::size_t k);

  std::size_t order() const { return elements_.size(); }
  std::size_t points() const { return points_; }
  const std::vector<SymmetryElement>& elements() const { return elements_; }

  // Group average, the orthogonal projection onto invariant configurations.
  // Applies equally to positions and gradients (both are equivariant).
  std::vector<Vec4> project(const std::vector<Vec4>& v) const;

  // Orthonormal basis (point-major flat vectors) of the invariant subspace.
  std::vector<std::vector<double>> invariant_basis(double tol = 1e-10) const;

 private:
  std::size_t points_ = 0;
  std::vector<SymmetryElement> elements_;
};

}  // namespace brl
