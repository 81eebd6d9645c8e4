#include "brl/interaction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "brl/annulus_green.hpp"
#include "brl/errors.hpp"

namespace brl {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::optional<std::string> admissibility_violation(const Configuration& config,
                                                   const GreenOracle& oracle) {
  if (config.points.empty()) return "configuration has no points";
  if (!(config.sep >= 0.0)) return "separation radius must be nonnegative";
  const double floor = 2.0 * config.sep;
  for (std::size_t i = 0; i < config.size(); ++i) {
    const double bd = oracle.boundary_distance(config.points[i]);
    if (!(bd > 0.0)) return "point " + std::to_string(i) + " is not inside the domain";
    if (bd < floor)
      return "point " + std::to_string(i) + " is " + fmt(bd) + " from the boundary, below 2*sep";
    for (std::size_t j = i + 1; j < config.size(); ++j) {
      const double d = distance(config.points[i], config.points[j]);
      if (!(d > 0.0)) return "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide";
      if (d < floor)
        return "points " + std::to_string(i) + " and " + std::to_string(j) + " are " + fmt(d) +
               " apart, below 2*sep";
    }
  }
  return std::nullopt;
}

bool is_admissible(const Configuration& config, const GreenOracle& oracle) {
  return !admissibility_violation(config, oracle).has_value();
}

void require_admissible(const Configuration& config, const GreenOracle& oracle) {
  if (auto why = admissibility_violation(config, oracle)) throw DomainError(*why);
}

Configuration sample_annulus_configuration(std::size_t k, const AnnulusGeometry& geom, double sep,
                                           std::uint64_t seed, int max_attempts) {
  if (k == 0) throw DomainError("configuration size must be positive");
  const double lo = geom.rho_in() + 2.0 * sep;
  const double hi = 1.0 - 2.0 * sep;
  if (!(lo < hi)) throw DomainError("separation radius leaves no admissible shell");

  std::mt19937_64 rng(seed);
  Configuration config;
  config.sep = sep;
  for (int attempt = 0; attempt < max_attempts && config.size() < k; ++attempt) {
    // Uniform direction from Gaussian coordinates, radius uniform in the shell.
    Vec4 dir;
    for (std::size_t a = 0; a < 4; a += 2) {
      const double u1 = std::max(uniform01(rng), 1e-300);
      const double u2 = uniform01(rng);
      const double rad = std::sqrt(-2.0 * std::log(u1));
      dir[a] = rad * std::cos(2.0 * std::numbers::pi * u2);
      dir[a + 1] = rad * std::sin(2.0 * std::numbers::pi * u2);
    }
    const double n = norm(dir);
    if (n < 1e-12) continue;
    const double r = lo + (hi - lo) * uniform01(rng);
    const Vec4 p = dir * (r / n);
    bool ok = true;
    for (const auto& q : config.points)
      if (distance(p, q) < 2.0 * sep) ok = false;
    if (ok) config.points.push_back(p);
  }
  if (config.size() < k) throw DomainError("could not sample an admissible configuration");
  return config;
}

std::vector<double> flatten_points(const Configuration& config) {
  std::vector<double> flat;
  flat.reserve(4 * config.size());
  for (const auto& p : config.points)
    for (std::size_t a = 0; a < 4; ++a) flat.push_back(p[a]);
  return flat;
}

Configuration with_points(const Configuration& base, const std::vector<double>& flat) {
  if (flat.size() != 4 * base.size()) throw std::invalid_argument("with_points: size mismatch");
  Configuration out = base;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t a = 0; a < 4; ++a) out.points[i][a] = flat[4 * i + a];
  return out;
}

InteractionMatrix assemble_m(const Configuration& config, const GreenOracle& oracle) {
  const std::size_t k = config.size();
  if (k == 0) throw DomainError("configuration has no points");
  InteractionMatrix out;
  out.entries = Matrix(k, k);
  out.config = config;
  for (std::size_t i = 0; i < k; ++i) {
    const EvalResult tau = oracle.robin(config.points[i]);
    out.entries(i, i) = tau.value;
    out.worst_tail = std::max(out.worst_tail, tau.tail_bound);
    out.degraded = out.degraded || tau.degraded;
    for (std::size_t j = i + 1; j < k; ++j) {
      const EvalResult g = oracle.green(config.points[i], config.points[j]);
      out.entries(i, j) = -g.value;
      out.entries(j, i) = -g.value;
      out.worst_tail = std::max(out.worst_tail, g.tail_bound);
      out.degraded = out.degraded || g.degraded;
      if (!(g.value > 0.0)) out.green_positive = false;
    }
  }
  return out;
}

SpectralData smallest_eigen(const Matrix& m) {
  const std::size_t k = m.rows();
  if (k == 0 || m.cols() != k) throw DomainError("smallest_eigen: matrix must be square and nonempty");
  if (k > 64) throw DomainError("smallest_eigen: k must not exceed 64");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (m(i, j) != m(j, i)) throw DomainError("smallest_eigen: matrix is not symmetric");

  const SymmetricEigen eig = symmetric_eigen(m);
  SpectralData out;
  out.spectrum = eig.values;
  out.lambda1 = eig.values[0];
  out.gap = k > 1 ? eig.values[1] - eig.values[0] : std::numeric_limits<double>::infinity();
  out.simple = out.gap > kSimplicityGap;
  if (!out.simple) out.warnings.push_back("smallest eigenvalue is not simple (gap " + fmt(out.gap) + ")");

  std::vector<double> v0(k);
  for (std::size_t i = 0; i < k; ++i) v0[i] = eig.vectors(i, 0);
  // Polish in extended precision so that small Perron components keep
  // their relative accuracy; never let the shift reach the next eigenvalue.
  const double max_shift = k > 1 ? 0.25 * out.gap : 1.0;
  const ExtendedEigenpair pair = refine_eigenpair(m, out.lambda1, v0, max_shift);
  const wide_real first = pair.vector[0];
  if (std::abs(static_cast<double>(first)) <= 1e-12)
    throw NormalizationError("Perron eigenvector has vanishing first component (" +
                             fmt(static_cast<double>(first)) +
                             "); off-diagonal entries must be negative");
  out.lambda1 = static_cast<double>(pair.value);
  out.eigvec.resize(k);
  for (std::size_t i = 0; i < k; ++i) out.eigvec[i] = static_cast<double>(pair.vector[i] / first);
  out.eigvec[0] = 1.0;
  out.spectrum[0] = out.lambda1;
  if (k > 1) out.gap = out.spectrum[1] - out.lambda1;
  out.positive = std::all_of(out.eigvec.begin(), out.eigvec.end(), [](double v) { return v > 0.0; });
  if (!out.positive) out.warnings.push_back("eigenvector of the smallest eigenvalue is not positive");

  wide_real res = 0;
  for (std::size_t i = 0; i < k; ++i) {
    wide_real r = -static_cast<wide_real>(out.lambda1) * out.eigvec[i];
    for (std::size_t j = 0; j < k; ++j) r += static_cast<wide_real>(m(i, j)) * out.eigvec[j];
    res += r * r;
  }
  out.residual = std::sqrt(static_cast<double>(res));
  return out;
}

SpectralData smallest_eigen(const InteractionMatrix& m) { return smallest_eigen(m.entries); }

TildeMatrices assemble_tilde_all(const Configuration& config, const GreenOracle& oracle) {
  const std::size_t k = config.size();
  TildeMatrices out;
  for (auto& a : out.axis) a = Matrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const GradResult gt = oracle.grad_robin(config.points[i]);
    out.worst_tail = std::max(out.worst_tail, gt.tail_bound);
    out.degraded = out.degraded || gt.degraded;
    for (int l = 0; l < 4; ++l) out.axis[l](i, i) = gt.gradient[l];
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      const GradResult gg = oracle.grad_green(config.points[i], config.points[j]);
      out.worst_tail = std::max(out.worst_tail, gg.tail_bound);
      out.degraded = out.degraded || gg.degraded;
      for (int l = 0; l < 4; ++l) out.axis[l](i, j) = -2.0 * gg.gradient[l];
    }
  }
  return out;
}

Matrix assemble_tilde_m(const Configuration& config, const GreenOracle& oracle, int axis) {
  if (axis < 0 || axis > 3) throw DomainError("axis must be in 0..3");
  return assemble_tilde_all(config, oracle).axis[axis];
}

std::vector<double> lambda1_gradient(const Configuration& config, const GreenOracle& oracle) {
  const std::size_t k = config.size();
  const SpectralData spec = smallest_eigen(assemble_m(config, oracle));
  if (!spec.simple)
    throw SimplicityError("gradient of the smallest eigenvalue requires a simple eigenvalue (gap " +
                          fmt(spec.gap) + ")");
  const TildeMatrices tilde = assemble_tilde_all(config, oracle);
  double norm_sq = 0.0;
  for (double v : spec.eigvec) norm_sq += v * v;
  std::vector<double> grad(4 * k);
  for (int l = 0; l < 4; ++l) {
    const std::vector<double> me = tilde.axis[l] * spec.eigvec;
    for (std::size_t i = 0; i < k; ++i) grad[l * k + i] = spec.eigvec[i] * me[i] / norm_sq;
  }
  return grad;
}

std::vector<Vec4> axis_major_to_points(const std::vector<double>& axis_major, std::size_t k) {
  if (axis_major.size() != 4 * k) throw std::invalid_argument("axis-major vector has wrong size");
  std::vector<Vec4> out(k);
  for (std::size_t l = 0; l < 4; ++l)
    for (std::size_t i = 0; i < k; ++i) out[i][l] = axis_major[l * k + i];
  return out;
}

std::vector<double> points_to_axis_major(const std::vector<Vec4>& by_point) {
  const std::size_t k = by_point.size();
  std::vector<double> out(4 * k);
  for (std::size_t l = 0; l < 4; ++l)
    for (std::size_t i = 0; i < k; ++i) out[l * k + i] = by_point[i][l];
  return out;
}

std::vector<Vec4> lambda1_gradient_by_point(const Configuration& config, const GreenOracle& oracle) {
  return axis_major_to_points(lambda1_gradient(config, oracle), config.size());
}

double rayleigh(const Matrix& m, const std::vector<double>& d) {
  const std::size_t k = m.rows();
  if (d.size() + 1 != k) throw DomainError("rayleigh: d must have length k-1");
  std::vector<double> e(k);
  e[0] = 1.0;
  std::copy(d.begin(), d.end(), e.begin() + 1);
  const std::vector<double> me = m * e;
  return dot(e, me) / dot(e, e);
}

}  // namespace brl
