#include "brl/ansatz.hpp"

#include "brl/errors.hpp"
#include "brl/parallel.hpp"

namespace brl {

std::vector<Vec4> SliceGrid::points() const {
  if (n1 < 1 || n2 < 1) throw DomainError("slice grid needs at least one point per axis");
  std::vector<Vec4> pts;
  pts.reserve(n1 * n2);
  for (std::size_t j = 0; j < n2; ++j) {
    const double x2 = n2 == 1 ? x2_min : x2_min + (x2_max - x2_min) * j / (n2 - 1.0);
    for (std::size_t i = 0; i < n1; ++i) {
      const double x1 = n1 == 1 ? x1_min : x1_min + (x1_max - x1_min) * i / (n1 - 1.0);
      pts.emplace_back(x1, x2, 0.0, 0.0);
    }
  }
  return pts;
}

AnsatzProfile ansatz_profile(const Configuration& config, const ReducedSolution& solution,
                             double epsilon, const GreenOracle& oracle, const SliceGrid& grid,
                             unsigned workers) {
  if (solution.d.size() + 1 != config.size())
    throw DomainError("reduced solution does not match the configuration size");
  const RateResult rr = rates(epsilon, solution.lambda, solution.d);

  AnsatzProfile prof;
  prof.epsilon = epsilon;
  prof.lambda = solution.lambda;
  prof.lambda1 = solution.spectral.lambda1;
  prof.d = solution.d;
  prof.deltas = rr.deltas;
  prof.underflow = rr.underflow;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (rr.underflow[i]) continue;  // a vanishing bubble contributes nothing
    prof.bubbles.push_back({rr.deltas[i], config.points[i]});
    if (rr.deltas[i] > 0.05) prof.large_delta = true;
  }

  for (const Vec4& p : grid.points()) {
    if (oracle.boundary_distance(p) < 0.0) {
      ++prof.skipped;
      continue;
    }
    prof.points.push_back(p);
  }
  prof.values.assign(prof.points.size(), 0.0);
  parallel_for(prof.points.size(), workers, [&](std::size_t i) {
    double w = 0.0;
    for (const auto& b : prof.bubbles) w += projected_bubble(b, prof.points[i], oracle).value;
    prof.values[i] = w;
  });
  return prof;
}

}  // namespace brl
