#pragma once

#include <array>
#include <vector>

#include "brl/green_oracle.hpp"
#include "brl/interaction.hpp"
#include "brl/linalg.hpp"

namespace brl {

// Closed-form solution (lambda, d) of the leading-order reduced system.
struct ReducedSolution {
  double lambda = 0.0;
  std::vector<double> d;          // length k-1, relative rates of points 2..k
  double eig_residual = 0.0;      // ||M (1,d) - lambda (1,d)||_2
  double eigvec_mismatch = 0.0;   // max |d_j - e_{j+1}| against the Perron vector
  double det_check = 0.0;         // det(Mbar - lambda Id)
  double det_threshold = 0.0;     // 1e-12 ||Mbar||^(k-1)
  SpectralData spectral;
  double worst_tail = 0.0;
  bool degraded = false;
};

// lambda = Lambda_1, d = (Mbar - lambda Id)^{-1} Gbar where Mbar drops the
// first row and column of M and Gbar_j = G(xi_1, xi_{j+1}).
// Throws InvertibilityError when det(Mbar - lambda Id) is negligible.
ReducedSolution solve_d_lambda(const Configuration& config, const GreenOracle& oracle);

// tau(xi_1) - sum_j d_j G(xi_1, xi_j) - lambda.
double eval_f1(const Configuration& config, const std::vector<double>& d, double lambda,
               const GreenOracle& oracle);

// (Mbar - lambda Id) d - Gbar.
std::vector<double> eval_f2(const Configuration& config, const std::vector<double>& d,
                            double lambda, const GreenOracle& oracle);

// Stacked Tilde-M^l (1,d)^T for l = 1..4, axis-major (index axis*k + i).
std::vector<double> eval_f3(const Configuration& config, const std::vector<double>& d,
                            const GreenOracle& oracle);

// Determinant of the Jacobian of (F1, F2) in (d, lambda) against the product
// formula -det(Mbar - Lambda_1 Id) (1 + |d|^2).
struct SchurReport {
  double det_d_lambda = 0.0;   // columns ordered (d, lambda)
  double det_lambda_d = 0.0;   // columns ordered (lambda, d)
  double formula = 0.0;
  double column_sign = 1.0;    // (-1)^(k-1), the reordering sign
  double relative_error = 0.0; // |det_d_lambda - column_sign*formula| / |formula|
  double relative_error_lambda_d = 0.0;  // |det_lambda_d - formula| / |formula|
  double relative_error_unsigned = 0.0;  // |det_d_lambda - formula| / |formula|
};

// Vacuous for k = 1 (all errors 0).
SchurReport schur_det_check(const Configuration& config, const GreenOracle& oracle);
SchurReport schur_det_check(const Configuration& config, const ReducedSolution& sol,
                            const GreenOracle& oracle);

struct ResidualReport {
  double epsilon = 0.0;
  std::vector<double> deltas;       // may underflow to 0
  std::vector<double> log_deltas;
  // Leading c0_h divided by delta_h^2, evaluated in the log domain.
  std::vector<double> c0;
  // tau_h - sum_{i != h} (d_i/d_h) G_ih - lambda: the part that cancels at the
  // reduced solution; c0 = bracket + epsilon ln(d_h)/(8 pi^2).
  std::vector<double> bracket;
  std::vector<double> log_correction;
  // Leading c^l_h divided by delta_1^2; rows h, columns axis.
  std::vector<std::array<double, 4>> ci;
};

// d has length k-1; rates follow delta_1 = exp(-8 pi^2 lambda/epsilon),
// delta_i = delta_1 d_i.
ResidualReport residual_c0(const Configuration& config, const std::vector<double>& d,
                           double lambda, double epsilon, const GreenOracle& oracle);

enum class KlConvention {
  Literal,   // reference eigenvalue scaled by 1/(8 pi^2)
  Unscaled,  // reference eigenvalue used as is
};

// d M d^T - c lambda1_ref |d|^2 with c set by the convention.
double kl_functional(const Matrix& m, const std::vector<double>& d_full, double lambda1_ref,
                     KlConvention convention);
double kl_functional(const Configuration& config, const std::vector<double>& d_full,
                     double lambda1_ref, const GreenOracle& oracle, KlConvention convention);

}  // namespace brl
