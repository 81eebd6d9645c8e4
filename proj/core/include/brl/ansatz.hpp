#pragma once

#include <cstddef>
#include <vector>

#include "brl/bubbles.hpp"
#include "brl/green_oracle.hpp"
#include "brl/interaction.hpp"
#include "brl/reduced_system.hpp"

namespace brl {

// Uniform grid on the (x1, x2) plane with x3 = x4 = 0.
struct SliceGrid {
  double x1_min = -1.0, x1_max = 1.0;
  double x2_min = -1.0, x2_max = 1.0;
  std::size_t n1 = 101, n2 = 101;

  std::vector<Vec4> points() const;  // x1 fastest
};

struct AnsatzProfile {
  std::vector<BubbleParams> bubbles;
  std::vector<Vec4> points;    // sample points inside the closed domain
  std::vector<double> values;  // W = sum of projected bubbles
  std::size_t skipped = 0;     // grid points outside the domain
  double epsilon = 0.0;
  double lambda = 0.0;
  double lambda1 = 0.0;
  std::vector<double> d;
  std::vector<double> deltas;
  std::vector<bool> underflow;
  bool large_delta = false;    // some delta > 0.05
};

// Samples W = sum_i PU_{delta_i, xi_i} with rates from (epsilon, lambda, d).
AnsatzProfile ansatz_profile(const Configuration& config, const ReducedSolution& solution,
                             double epsilon, const GreenOracle& oracle, const SliceGrid& grid,
                             unsigned workers = 0);

}  // namespace brl
