#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brl/green_oracle.hpp"
#include "brl/interaction.hpp"
#include "brl/symmetry.hpp"

namespace brl {

struct SearchControls {
  double grad_tol = 1e-8;
  int max_iter = 200;
  double initial_step = 0.02;      // length of the first trial step
  double hessian_step = 1e-4;
  double eigen_threshold = 1e-6;   // |eigenvalue| below this counts as zero
  bool compute_hessian = true;
  // When set, iterates and gradients are averaged over the group so the
  // search stays on the invariant configurations.
  std::optional<SymmetryGroup> symmetry;
};

enum class Stability {
  StrictMinimum,
  DegenerateNonNegative,
  Saddle,
  DegenerateNonPositive,
  StrictMaximum,
  Unavailable,
};

const char* to_string(Stability s);

Stability classify_spectrum(const std::vector<double>& ascending, double threshold);

struct SearchIterate {
  int iteration = 0;
  double lambda1 = 0.0;
  double grad_norm = 0.0;
  double step = 0.0;
  bool boundary_hit = false;
};

struct SearchResult {
  Configuration config;
  SpectralData spectral;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  bool boundary_hit = false;
  std::vector<SearchIterate> history;  // entry 0 is the starting point
  std::vector<double> hessian_full;     // spectrum over all 4k coordinates
  std::vector<double> hessian_reduced;  // spectrum on the invariant subspace
  Stability stability_full = Stability::Unavailable;
  Stability stability_reduced = Stability::Unavailable;
  std::string message;
};

// Descent on Lambda_1 with an exact line search along the negative
// gradient. Steps that would leave the admissible set are cut at its edge.
// Throws LineSearchError if no non-increasing step can be found.
SearchResult critical_search(const Configuration& initial, const GreenOracle& oracle,
                             const SearchControls& controls = {});

// Central-difference Hessian of Lambda_1 restricted to span(basis), built
// from analytic gradients and symmetrized. Basis vectors are point-major.
Matrix fd_hessian(const Configuration& config, const GreenOracle& oracle,
                  const std::vector<std::vector<double>>& basis, double step);

}  // namespace brl
