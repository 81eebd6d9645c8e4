#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brl/green_oracle.hpp"
#include "brl/linalg.hpp"
#include "brl/vec4.hpp"

namespace brl {

class AnnulusGeometry;

// k concentration points; sep is the separation radius of the admissible set,
// so points keep 2*sep from each other and from the boundary.
struct Configuration {
  std::vector<Vec4> points;
  double sep = 0.0;

  std::size_t size() const { return points.size(); }
};

// Reason the configuration is not admissible for the oracle, if any.
std::optional<std::string> admissibility_violation(const Configuration& config,
                                                   const GreenOracle& oracle);
bool is_admissible(const Configuration& config, const GreenOracle& oracle);
// Throws DomainError with the violation.
void require_admissible(const Configuration& config, const GreenOracle& oracle);

// Reproducible rejection sampling of an admissible configuration.
Configuration sample_annulus_configuration(std::size_t k, const AnnulusGeometry& geom, double sep,
                                           std::uint64_t seed, int max_attempts = 100000);

// Flattened coordinates, point-major: index 4*i + axis.
std::vector<double> flatten_points(const Configuration& config);
Configuration with_points(const Configuration& base, const std::vector<double>& flat);

struct InteractionMatrix {
  Matrix entries;
  Configuration config;
  double worst_tail = 0.0;
  bool degraded = false;
  bool green_positive = true;  // every off-diagonal Green value > 0
};

// m_ii = tau(xi_i), m_ij = -G(xi_i, xi_j).
InteractionMatrix assemble_m(const Configuration& config, const GreenOracle& oracle);

struct SpectralData {
  double lambda1 = 0.0;
  std::vector<double> eigvec;    // first component 1
  double gap = 0.0;              // second smallest minus smallest eigenvalue
  std::vector<double> spectrum;  // ascending
  bool positive = false;         // every eigenvector component > 0
  bool simple = false;           // gap above the simplicity threshold
  double residual = 0.0;         // ||M e - lambda1 e||_2
  std::vector<std::string> warnings;
};

inline constexpr double kSimplicityGap = 1e-12;

// Smallest eigenpair with the eigenvector scaled to first component 1.
SpectralData smallest_eigen(const Matrix& m);
SpectralData smallest_eigen(const InteractionMatrix& m);

// Tilde-M^l for axis l in 0..3: diagonal d tau/d(xi_i)_l, off-diagonal
// -2 dG(xi_i, xi_j)/d(xi_i)_l. Not symmetric.
Matrix assemble_tilde_m(const Configuration& config, const GreenOracle& oracle, int axis);

struct TildeMatrices {
  Matrix axis[4];
  double worst_tail = 0.0;
  bool degraded = false;
};

TildeMatrices assemble_tilde_all(const Configuration& config, const GreenOracle& oracle);

// Gradient of the smallest eigenvalue, axis-major: index axis*k + i.
// Throws SimplicityError when the eigenvalue is not simple.
std::vector<double> lambda1_gradient(const Configuration& config, const GreenOracle& oracle);

// Same gradient in point-major layout.
std::vector<Vec4> lambda1_gradient_by_point(const Configuration& config, const GreenOracle& oracle);

std::vector<Vec4> axis_major_to_points(const std::vector<double>& axis_major, std::size_t k);
std::vector<double> points_to_axis_major(const std::vector<Vec4>& by_point);

// (1,d) M (1,d)^T / (1 + |d|^2); d has length k-1.
double rayleigh(const Matrix& m, const std::vector<double>& d);

}  // namespace brl
