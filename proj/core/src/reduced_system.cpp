#include "brl/reduced_system.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "brl/constants.hpp"
#include "brl/errors.hpp"

namespace brl {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Mbar - lambda Id.
Matrix shifted_block(const Matrix& m, double lambda) {
  const std::size_t n = m.rows() - 1;
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(i + 1, j + 1) - (i == j ? lambda : 0.0);
  return out;
}

std::vector<double> gbar(const Matrix& m) {
  std::vector<double> g(m.rows() - 1);
  for (std::size_t j = 0; j < g.size(); ++j) g[j] = -m(0, j + 1);
  return g;
}

void check_d(const Configuration& config, const std::vector<double>& d) {
  if (d.size() + 1 != config.size())
    throw DomainError("weight vector must have length k-1 (" + std::to_string(config.size() - 1) +
                      "), got " + std::to_string(d.size()));
}

std::vector<double> extended(const std::vector<double>& d) {
  std::vector<double> e(d.size() + 1, 1.0);
  std::copy(d.begin(), d.end(), e.begin() + 1);
  return e;
}

double relative(double a, double b) {
  const double denom = std::abs(b);
  return denom > 0.0 ? std::abs(a - b) / denom : std::abs(a - b);
}

}  // namespace

ReducedSolution solve_d_lambda(const Configuration& config, const GreenOracle& oracle) {
  const InteractionMatrix im = assemble_m(config, oracle);
  const Matrix& m = im.entries;
  const std::size_t k = m.rows();
  ReducedSolution sol;
  sol.spectral = smallest_eigen(m);
  sol.lambda = sol.spectral.lambda1;
  sol.worst_tail = im.worst_tail;
  sol.degraded = im.degraded;
  if (k == 1) {
    sol.det_check = 1.0;
    return sol;
  }
  if (!sol.spectral.simple)
    throw SimplicityError("reduced system needs a simple smallest eigenvalue (gap " +
                          fmt(sol.spectral.gap) + ")");

  // The shifted block is nearly singular whenever the Perron vector has a
  // small first component, so the solve runs in extended precision with
  // the extended-precision eigenvalue.
  std::vector<double> v0(k);
  const double e_norm = norm2(sol.spectral.eigvec);
  for (std::size_t i = 0; i < k; ++i) v0[i] = sol.spectral.eigvec[i] / e_norm;
  const wide_real lambda =
      refine_eigenpair(m, sol.lambda, v0, 0.25 * sol.spectral.gap).value;
  const std::size_t n = k - 1;
  std::vector<wide_real> block(n * n);
  std::vector<wide_real> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i] = -static_cast<wide_real>(m(0, i + 1));
    for (std::size_t j = 0; j < n; ++j)
      block[i * n + j] = static_cast<wide_real>(m(i + 1, j + 1)) - (i == j ? lambda : 0);
  }
  const Matrix mbar = shifted_block(m, 0.0);
  sol.det_check = static_cast<double>(determinant_extended(block, n));
  sol.det_threshold = 1e-12 * std::pow(mbar.norm_inf(), static_cast<double>(n));
  if (!(std::abs(sol.det_check) > sol.det_threshold))
    throw InvertibilityError("det(Mbar - Lambda_1 Id) = " + fmt(sol.det_check) +
                             " is below the invertibility threshold " + fmt(sol.det_threshold));
  const std::vector<wide_real> d = solve_extended(block, n, rhs);
  sol.d.resize(n);
  for (std::size_t j = 0; j < n; ++j) sol.d[j] = static_cast<double>(d[j]);

  wide_real res = 0;
  const std::vector<double> e = extended(sol.d);
  for (std::size_t i = 0; i < k; ++i) {
    wide_real r = -static_cast<wide_real>(sol.lambda) * e[i];
    for (std::size_t j = 0; j < k; ++j) r += static_cast<wide_real>(m(i, j)) * e[j];
    res += r * r;
  }
  sol.eig_residual = std::sqrt(static_cast<double>(res));
  for (std::size_t j = 0; j < n; ++j)
    sol.eigvec_mismatch =
        std::max(sol.eigvec_mismatch, std::abs(sol.d[j] - sol.spectral.eigvec[j + 1]));
  return sol;
}

double eval_f1(const Configuration& config, const std::vector<double>& d, double lambda,
               const GreenOracle& oracle) {
  check_d(config, d);
  double f = oracle.robin(config.points[0]).value - lambda;
  for (std::size_t j = 0; j < d.size(); ++j)
    f -= d[j] * oracle.green(config.points[0], config.points[j + 1]).value;
  return f;
}

std::vector<double> eval_f2(const Configuration& config, const std::vector<double>& d,
                            double lambda, const GreenOracle& oracle) {
  check_d(config, d);
  const Matrix m = assemble_m(config, oracle).entries;
  if (m.rows() == 1) return {};
  std::vector<double> out = shifted_block(m, lambda) * d;
  const std::vector<double> g = gbar(m);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] -= g[j];
  return out;
}

std::vector<double> eval_f3(const Configuration& config, const std::vector<double>& d,
                            const GreenOracle& oracle) {
  check_d(config, d);
  const std::size_t k = config.size();
  const TildeMatrices tilde = assemble_tilde_all(config, oracle);
  const std::vector<double> e = extended(d);
  std::vector<double> out(4 * k);
  for (std::size_t l = 0; l < 4; ++l) {
    const std::vector<double> me = tilde.axis[l] * e;
    for (std::size_t i = 0; i < k; ++i) out[l * k + i] = me[i];
  }
  return out;
}

SchurReport schur_det_check(const Configuration& config, const GreenOracle& oracle) {
  if (config.size() == 1) return SchurReport{};
  return schur_det_check(config, solve_d_lambda(config, oracle), oracle);
}

SchurReport schur_det_check(const Configuration& config, const ReducedSolution& sol,
                            const GreenOracle& oracle) {
  const std::size_t k = config.size();
  SchurReport rep;
  if (k == 1) return rep;
  const Matrix m = assemble_m(config, oracle).entries;
  const Matrix block = shifted_block(m, sol.lambda);
  const std::vector<double> g = gbar(m);
  const std::size_t n = k - 1;

  // Rows: F1 then F2. Columns (d_2..d_k, lambda).
  Matrix jac(k, k);
  for (std::size_t j = 0; j < n; ++j) jac(0, j) = -g[j];
  jac(0, n) = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) jac(i + 1, j) = block(i, j);
    jac(i + 1, n) = -sol.d[i];
  }
  // Same Jacobian with lambda moved to the first column.
  Matrix jac_ld(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    jac_ld(i, 0) = jac(i, n);
    for (std::size_t j = 0; j < n; ++j) jac_ld(i, j + 1) = jac(i, j);
  }

  double dd = 0.0;
  for (double v : sol.d) dd += v * v;
  rep.det_d_lambda = determinant(jac);
  rep.det_lambda_d = determinant(jac_ld);
  rep.formula = -determinant(block) * (1.0 + dd);
  rep.column_sign = (n % 2 == 0) ? 1.0 : -1.0;
  rep.relative_error = relative(rep.det_d_lambda, rep.column_sign * rep.formula);
  rep.relative_error_lambda_d = relative(rep.det_lambda_d, rep.formula);
  rep.relative_error_unsigned = relative(rep.det_d_lambda, rep.formula);
  return rep;
}

ResidualReport residual_c0(const Configuration& config, const std::vector<double>& d,
                           double lambda, double epsilon, const GreenOracle& oracle) {
  check_d(config, d);
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  for (double v : d)
    if (!(v > 0.0)) throw DomainError("weights must be positive");
  const std::size_t k = config.size();
  const Matrix m = assemble_m(config, oracle).entries;
  const std::vector<double> e = extended(d);

  ResidualReport rep;
  rep.epsilon = epsilon;
  const double log_d1 = -constants::rate_scale * lambda / epsilon;
  for (std::size_t h = 0; h < k; ++h) {
    const double ld = log_d1 + std::log(e[h]);
    rep.log_deltas.push_back(ld);
    rep.deltas.push_back(ld < std::log(1e-300) ? 0.0 : std::exp(ld));

    double bracket = m(h, h);
    for (std::size_t i = 0; i < k; ++i)
      if (i != h) bracket += (e[i] / e[h]) * m(i, h);
    // (1/(4 omega)) eps ln(delta_h) = -lambda + eps ln(d_h)/(8 pi^2).
    const double corr = epsilon * std::log(e[h]) / constants::rate_scale;
    bracket -= lambda;
    rep.bracket.push_back(bracket);
    rep.log_correction.push_back(corr);
    rep.c0.push_back(bracket + corr);
  }

  const TildeMatrices tilde = assemble_tilde_all(config, oracle);
  rep.ci.resize(k);
  for (std::size_t l = 0; l < 4; ++l) {
    const std::vector<double> me = tilde.axis[l] * e;
    for (std::size_t h = 0; h < k; ++h) rep.ci[h][l] = e[h] * me[h];
  }
  return rep;
}

double kl_functional(const Matrix& m, const std::vector<double>& d_full, double lambda1_ref,
                     KlConvention convention) {
  if (d_full.size() != m.rows()) throw DomainError("kl_functional: d must have length k");
  const double scale = convention == KlConvention::Literal ? 1.0 / constants::rate_scale : 1.0;
  return dot(d_full, m * d_full) - scale * lambda1_ref * dot(d_full, d_full);
}

double kl_functional(const Configuration& config, const std::vector<double>& d_full,
                     double lambda1_ref, const GreenOracle& oracle, KlConvention convention) {
  return kl_functional(assemble_m(config, oracle).entries, d_full, lambda1_ref, convention);
}

}  // namespace brl
