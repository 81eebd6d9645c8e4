#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brl/annulus_green.hpp"
#include "brl/interaction.hpp"
#include "brl/vec4.hpp"

namespace brl {

// k points evenly spaced on the circle of radius r in the (x1, x2) plane,
// the first one on the positive x1 axis.
struct RingConfig {
  std::size_t k = 2;
  double r = 0.5;

  std::vector<Vec4> points() const;
  Configuration configuration(double sep = 0.0) const;
};

struct CirculantCoeffs {
  std::vector<double> a;  // a_0 = tau(xi_1), a_j = -G(xi_1, xi_{j+1})
  double tail_bound = 0.0;  // sum of coefficient tail bounds
  bool degraded = false;
  int max_terms = 0;        // truncation finally used
};

// Largest truncation the adaptive evaluations escalate to.
inline constexpr int kMaxTermsCap = 204800;

// Evaluates with ctrl, then raises max_terms fourfold while any coefficient
// is still above ctrl.target_tol, up to max(ctrl.max_terms, cap).
CirculantCoeffs circulant_coeffs(const RingConfig& ring, const AnnulusGeometry& geom,
                                 const SeriesControl& ctrl, int cap = kMaxTermsCap);

// Lambda_l = sum_j a_j exp(2 pi i j (l-1)/k), l = 1..k, in that order.
// Throws SymmetryError if an imaginary part exceeds 1e-12 max(1, sum |a_j|).
std::vector<double> circulant_eigs(const std::vector<double>& coeffs);

// tau(xi_1) - sum_{j>=1} G(xi_1, xi_{j+1}), with accumulated tail bound.
EvalResult lambda1_ring(const RingConfig& ring, const AnnulusGeometry& geom,
                        const SeriesControl& ctrl, int cap = kMaxTermsCap);

// Default radius grid: log-spaced densification toward both walls.
std::vector<double> default_r_grid(double rho_in, std::size_t n = 512);

// Series value of G at two perpendicular ring points next to the value
// 1/(4 omega r^2) of the singular part alone.
struct PerpendicularSample {
  double r = 0.0;
  double g_series = 0.0;
  double g_shortcut = 0.0;
  double difference = 0.0;  // g_series - g_shortcut = -H
  double tail_bound = 0.0;
};

PerpendicularSample perpendicular_diagnostic(double r, const AnnulusGeometry& geom,
                                             const SeriesControl& ctrl);

struct ScanOptions {
  std::vector<double> r_grid;  // empty selects default_r_grid
  std::size_t grid_points = 512;
  unsigned workers = 0;        // 0 = hardware concurrency
  int max_terms_cap = kMaxTermsCap;
  double golden_tol = 1e-10;
  bool perpendicular_columns = false;  // forced on for k = 4
};

struct RingScan {
  std::size_t k = 0;
  double rho_in = 0.0;
  std::vector<double> r_grid;
  std::vector<std::vector<double>> lambda_by_ell;  // [l][grid index]
  std::vector<double> tail_bound;
  std::vector<int> terms_used;
  std::size_t degraded_points = 0;
  std::size_t grid_argmin = 0;
  double argmin_r = 0.0;
  double min_value = 0.0;
  double min_tail = 0.0;
  // k = 4 only: perpendicular Green values and the Lambda_1 they imply.
  std::vector<double> g_perp_series;
  std::vector<double> g_perp_shortcut;
  std::vector<double> lambda1_shortcut;
};

// Grid bracketing then golden-section refinement of min_r Lambda_1(r).
// Throws ScanError when the grid minimum sits at an endpoint.
RingScan min_over_r(std::size_t k, const AnnulusGeometry& geom, const SeriesControl& ctrl,
                    const ScanOptions& options = {});

struct ThresholdSample {
  double rho = 0.0;
  double min_value = 0.0;
  double min_tail = 0.0;
  double argmin_r = 0.0;
  bool sign_certain = true;  // tail bound below |min_value|/10
};

struct ThresholdResult {
  std::size_t k = 0;
  double rho_star = 0.0;       // midpoint of the final bracket
  double bracket_lo = 0.0;     // min_r Lambda_1 <= 0 here
  double bracket_hi = 0.0;     // min_r Lambda_1 > 0 here
  double bracket_width = 0.0;
  double min_at_lo = 0.0;
  double min_at_hi = 0.0;
  bool one_signed = false;     // no sign change on the search range
  int sign = 0;                // common sign when one_signed
  std::vector<ThresholdSample> samples;
  std::vector<std::string> warnings;
};

struct ThresholdOptions {
  double rho_lo = 0.01;
  double rho_hi = 0.99;
  double tol = 1e-4;
  ScanOptions scan;
};

// Bisection in rho on the sign of min_r Lambda_1, assuming a single change.
ThresholdResult threshold_rho(std::size_t k, const SeriesControl& ctrl,
                              const ThresholdOptions& options = {});

struct SufficientConditionReport {
  std::size_t k = 0;
  double rho_in = 0.0;
  std::vector<double> r_grid;
  std::vector<bool> inequality;    // closed-form sufficient inequality per r
  bool all_hold = false;
  std::vector<double> lower_bound; // (1/omega)[-c_k/(8 r^2) + 2 Q_0(r)]
  std::vector<double> lambda1;     // full series
  std::vector<double> tail_bound;
  std::vector<bool> chain_holds;   // lambda1 >= lower_bound - tail
  std::size_t chain_violations = 0;
};

// k in {2, 4}: c_2 = 1, c_4 = 5.
SufficientConditionReport sufficient_condition_check(std::size_t k, double rho_in,
                                                     const std::vector<double>& r_grid,
                                                     const SeriesControl& ctrl,
                                                     unsigned workers = 0);

// Closed-form sufficient inequality alone.
bool sufficient_inequality(std::size_t k, double rho_in, double r);

// Structured comparison between the full series and the perpendicular
// shortcut for the four-point ring, always produced for k = 4 scans.
struct PerpendicularReport {
  double rho_in = 0.0;
  std::vector<PerpendicularSample> samples;  // one per grid radius
  double max_abs_difference = 0.0;
  double max_rel_difference = 0.0;
  bool shortcut_agrees = false;  // every difference within 10 tail bounds
  double min_lambda1_series = 0.0;
  double argmin_series = 0.0;
  double min_lambda1_shortcut = 0.0;
  double argmin_shortcut = 0.0;
  bool positivity_confirmed = false;  // series minimum > 0 with tail < |min|/10
  std::string summary;
};

PerpendicularReport perpendicular_report(const RingScan& scan4, const AnnulusGeometry& geom,
                                         const SeriesControl& ctrl);

}  // namespace brl
