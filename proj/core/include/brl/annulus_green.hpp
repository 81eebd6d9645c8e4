#pragma once

#include <string>

#include "brl/green_oracle.hpp"
#include "brl/vec4.hpp"

namespace brl {

// The annulus rho_in < |x| < 1 in R^4.
class AnnulusGeometry {
 public:
  explicit AnnulusGeometry(double rho_in);

  double rho_in() const { return rho_in_; }

  bool contains(const Vec4& x) const;         // open annulus
  bool contains_closed(const Vec4& x) const;  // closed annulus
  double boundary_distance(const Vec4& x) const;

 private:
  double rho_in_;
};

struct SeriesControl {
  int max_terms = 200;
  double target_tol = 1e-10;

  void validate() const;
};

// Library defaults, with BRL_MAX_TERMS overriding max_terms when set.
SeriesControl default_series_control();

// Radial coefficient Q_m(s, t) of the regular part; requires rho_in < s, t < 1.
double q_m_pair(int m, double s, double t, const AnnulusGeometry& geom);

// Q_m(s, s).
double q_m_diag(int m, double s, const AnnulusGeometry& geom);

// Bound on the discarded tail of the regular-part series after terms 0..last_m.
double regular_part_tail_bound(double s, double t, const AnnulusGeometry& geom, int last_m);

// Points may lie on the boundary as long as the series converges, that is
// not both on the same boundary sphere.
EvalResult green(const Vec4& x, const Vec4& y, const AnnulusGeometry& geom,
                 const SeriesControl& ctrl);
EvalResult regular_part(const Vec4& x, const Vec4& y, const AnnulusGeometry& geom,
                        const SeriesControl& ctrl);
GradResult grad_green(const Vec4& x, const Vec4& y, const AnnulusGeometry& geom,
                      const SeriesControl& ctrl);

// Robin function; x strictly inside.
EvalResult robin(const Vec4& x, const AnnulusGeometry& geom, const SeriesControl& ctrl);
EvalResult robin_radial(double s, const AnnulusGeometry& geom, const SeriesControl& ctrl);
GradResult grad_robin(const Vec4& x, const AnnulusGeometry& geom, const SeriesControl& ctrl);
// d tau / d|x|.
EvalResult robin_radial_derivative(double s, const AnnulusGeometry& geom,
                                   const SeriesControl& ctrl);

class AnnulusOracle : public GreenOracle {
 public:
  explicit AnnulusOracle(AnnulusGeometry geom, SeriesControl ctrl = default_series_control());

  const AnnulusGeometry& geometry() const { return geom_; }
  const SeriesControl& control() const { return ctrl_; }

  EvalResult green(const Vec4& x, const Vec4& y) const override;
  EvalResult regular_part(const Vec4& x, const Vec4& y) const override;
  EvalResult robin(const Vec4& x) const override;
  GradResult grad_green(const Vec4& x, const Vec4& y) const override;
  GradResult grad_robin(const Vec4& x) const override;
  double boundary_distance(const Vec4& x) const override;
  std::string describe() const override;

 private:
  AnnulusGeometry geom_;
  SeriesControl ctrl_;
};

}  // namespace brl
