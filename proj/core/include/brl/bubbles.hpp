#pragma once

#include <vector>

#include "brl/green_oracle.hpp"
#include "brl/vec4.hpp"

namespace brl {

struct BubbleParams {
  double delta = 1.0;  // concentration scale, > 0
  Vec4 center;
};

// Aubin-Talenti bubble alpha4 delta / (delta^2 + |x - center|^2).
double bubble_u(const BubbleParams& params, const Vec4& x);

// Kernel functions of the linearized equation at the bubble, j = 0..4.
// j = 0 is the dilation mode, j = 1..4 the translation modes; each is
// delta^{-1} psi((x - center)/delta) of the unit profile.
double psi_kernel(int j, const BubbleParams& params, const Vec4& x);

struct ProjectedBubble {
  double value = 0.0;
  double tail_bound = 0.0;  // inherited from the regular-part series
  bool large_delta = false; // delta > 0.05, where the expansion is coarse
};

// Two-term approximation U - frak_c delta H(x, center) of the projection of
// the bubble onto functions vanishing on the boundary.
ProjectedBubble projected_bubble(const BubbleParams& params, const Vec4& x,
                                 const GreenOracle& oracle);

inline constexpr double kUnderflowFloor = 1e-300;

struct RateResult {
  std::vector<double> deltas;      // delta_1 = exp(-8 pi^2 lambda/eps), delta_i = delta_1 d_i
  std::vector<double> log_deltas;
  std::vector<bool> underflow;     // delta below kUnderflowFloor, reported as 0
};

// d has length k-1.
RateResult rates(double epsilon, double lambda, const std::vector<double>& d);

struct QuadratureReport {
  double value = 0.0;
  double exact = 0.0;       // pi^2 / 6
  double deviation = 0.0;   // |value - exact|
  int panels = 0;           // Gauss-Legendre panels per half-range
};

// omega * int_0^inf (r^2 - 1) r^3 / (1 + r^2)^4 dr by composite
// Gauss-Legendre with a fixed number of panels on each side of r = 1.
QuadratureReport radial_identity_quadrature(int panels);

// Doubles the panel count until successive values agree to 1e-15.
QuadratureReport quad_identity_check();

}  // namespace brl
