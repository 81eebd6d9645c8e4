#include "brl/annulus_green.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "brl/constants.hpp"
#include "brl/errors.hpp"

namespace brl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRadiusSlack = 1e-14;
constexpr double kSingularDistance = 1e-8;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Upper bound of sum_{m > last} (m+2)^p q^m given q^{last+1}.
double poly_tail(double q, double q_pow_next, int last, int p) {
  if (q_pow_next == 0.0) return 0.0;
  const double first = std::pow(last + 3.0, p) * q_pow_next;
  const double ratio = std::pow((last + 4.0) / (last + 3.0), p) * q;
  if (ratio >= 1.0) return kInf;
  return first / (1.0 - ratio);
}

// Pair of geometric tails that dominate the radial coefficients.
double radial_tail(double s, double t, double rho2, int last, int p) {
  const double q1 = s * t;
  const double q2 = rho2 / (s * t);
  const double a = poly_tail(q1, std::pow(q1, last + 1), last, p);
  const double b = poly_tail(q2, std::pow(q2, last + 1), last, p);
  return a + q2 * b / (s * t);
}

// Validates a radius of the closed annulus and snaps round-off overshoot.
double closed_radius(double s, double rho, const char* what) {
  if (!(s >= rho - kRadiusSlack && s <= 1.0 + kRadiusSlack))
    throw DomainError(std::string(what) + " radius " + fmt(s) + " lies outside the annulus [" +
                      fmt(rho) + ", 1]");
  return std::clamp(s, rho, 1.0);
}

double open_radius(double s, double rho, const char* what) {
  if (!(s > rho && s < 1.0))
    throw DomainError(std::string(what) + " radius " + fmt(s) + " lies outside the open annulus (" +
                      fmt(rho) + ", 1)");
  return s;
}

void check_pair_converges(double s, double t, double rho) {
  const double st = s * t;
  if (!(st < 1.0) || !(rho * rho < st))
    throw DomainError("regular-part series diverges: both points on the same boundary sphere");
}

// Iterates the radial coefficients Q_m(s, t) and dQ_m/ds for m = 0, 1, ...
class RadialTerms {
 public:
  RadialTerms(double s, double t, double rho)
      : s_(s), st_(s * t), rho2_(rho * rho), q1_(s * t), q2_(rho * rho / (s * t)),
        ratio_in_(rho * rho / (t * t)), t2_(t * t), p1_(1.0), p2_(q2_), rt_(ratio_in_),
        ta_(t2_), ra_(rho2_) {}

  // Advances to the next degree, filling q and dq for the current one.
  void next(int m, double& q, double& dq) {
    const double a = p1_ * (1.0 - rt_);
    const double b = p2_ * (1.0 - ta_) / st_;
    const double den = (2.0 * m + 2.0) * (1.0 - ra_);
    q = (a + b) / den;
    dq = (m * a - (m + 2.0) * b) / (s_ * den);
    p1_ *= q1_;
    p2_ *= q2_;
    rt_ *= ratio_in_;
    ta_ *= t2_;
    ra_ *= rho2_;
  }

 private:
  double s_, st_, rho2_, q1_, q2_, ratio_in_, t2_;
  double p1_, p2_, rt_, ta_, ra_;
};

double value_tail(double s, double t, double rho, int last) {
  const double rho2 = rho * rho;
  return radial_tail(s, t, rho2, last, 1) / (2.0 * constants::omega * (1.0 - rho2));
}

double gradient_tail(double s, double t, double rho, int last) {
  const double rho2 = rho * rho;
  const double t2 = radial_tail(s, t, rho2, last, 2);
  const double t3 = radial_tail(s, t, rho2, last, 3);
  if (std::isinf(t2) || std::isinf(t3)) return kInf;
  return (0.5 * t2 + t3 / 6.0) / (constants::omega * s * (1.0 - rho2));
}

double robin_gradient_tail(double s, double rho, int last) {
  const double rho2 = rho * rho;
  return radial_tail(s, s, rho2, last, 2) / (constants::omega * s * (1.0 - rho2));
}

// How often the tail bound is refreshed while summing.
constexpr int kTailStride = 8;

struct PairGeometry {
  double s;
  double t;
  double c;
  Vec4 xhat;
  Vec4 yhat;
};

PairGeometry pair_geometry(const Vec4& x, const Vec4& y, const AnnulusGeometry& geom) {
  const double rho = geom.rho_in();
  PairGeometry g{};
  g.s = closed_radius(norm(x), rho, "first point");
  g.t = closed_radius(norm(y), rho, "second point");
  check_pair_converges(g.s, g.t, rho);
  g.xhat = x * (1.0 / norm(x));
  g.yhat = y * (1.0 / norm(y));
  g.c = std::clamp(dot(g.xhat, g.yhat), -1.0, 1.0);
  return g;
}

EvalResult regular_part_impl(const PairGeometry& g, const AnnulusGeometry& geom,
                             const SeriesControl& ctrl) {
  ctrl.validate();
  const double rho = geom.rho_in();
  RadialTerms terms(g.s, g.t, rho);
  double p_prev = 0.0;
  double p_cur = 1.0;
  double sum = 0.0;
  EvalResult r;
  r.tail_bound = kInf;
  for (int m = 0; m < ctrl.max_terms; ++m) {
    double q = 0.0;
    double dq = 0.0;
    terms.next(m, q, dq);
    sum += q * (m + 1) * p_cur;
    const double p_next = 2.0 * g.c * p_cur - p_prev;
    p_prev = p_cur;
    p_cur = p_next;
    r.terms_used = m + 1;
    if (m % kTailStride == kTailStride - 1 || m + 1 == ctrl.max_terms) {
      r.tail_bound = value_tail(g.s, g.t, rho, m);
      if (r.tail_bound <= ctrl.target_tol) break;
    }
  }
  r.value = sum / constants::omega;
  r.degraded = !(r.tail_bound <= ctrl.target_tol);
  return r;
}

void check_not_singular(const Vec4& x, const Vec4& y) {
  const double d = distance(x, y);
  if (d < kSingularDistance)
    throw SingularityError("Green's function evaluated at coincident points (|x-y| = " + fmt(d) +
                           ")");
}

}  // namespace

AnnulusGeometry::AnnulusGeometry(double rho_in) : rho_in_(rho_in) {
  if (!(rho_in > 0.0 && rho_in < 1.0))
    throw DomainError("annulus inner radius must lie in (0, 1), got " + fmt(rho_in));
}

bool AnnulusGeometry::contains(const Vec4& x) const {
  const double s = norm(x);
  return s > rho_in_ && s < 1.0;
}

bool AnnulusGeometry::contains_closed(const Vec4& x) const {
  const double s = norm(x);
  return s >= rho_in_ - kRadiusSlack && s <= 1.0 + kRadiusSlack;
}

double AnnulusGeometry::boundary_distance(const Vec4& x) const {
  const double s = norm(x);
  return std::min(s - rho_in_, 1.0 - s);
}

void SeriesControl::validate() const {
  if (max_terms < 1) throw DomainError("series control: max_terms must be >= 1");
  if (!(target_tol > 0.0)) throw DomainError("series control: target_tol must be > 0");
}

SeriesControl default_series_control() {
  SeriesControl ctrl;
  if (const char* env = std::getenv("BRL_MAX_TERMS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    errno = 0;
    const long v = std::strtol(env, &end, 10);
    if (errno != 0 || end == env || *end != '\0' || v < 1 || v > 100000000)
      throw DomainError(std::string("BRL_MAX_TERMS must be a positive integer, got '") + env + "'");
    ctrl.max_terms = static_cast<int>(v);
  }
  return ctrl;
}

double q_m_pair(int m, double s, double t, const AnnulusGeometry& geom) {
  if (m < 0) throw DomainError("q_m_pair: degree must be nonnegative");
  const double rho = geom.rho_in();
  open_radius(s, rho, "first");
  open_radius(t, rho, "second");
  RadialTerms terms(s, t, rho);
  double q = 0.0;
  double dq = 0.0;
  for (int n = 0; n <= m; ++n) terms.next(n, q, dq);
  return q;
}

double q_m_diag(int m, double s, const AnnulusGeometry& geom) { return q_m_pair(m, s, s, geom); }

double regular_part_tail_bound(double s, double t, const AnnulusGeometry& geom, int last_m) {
  return value_tail(s, t, geom.rho_in(), last_m);
}

EvalResult regular_part(const Vec4& x, const Vec4& y, const AnnulusGeometry& geom,
                        const SeriesControl& ctrl) {
  return regular_part_impl(pair_geometry(x, y, geom), geom, ctrl);
}

EvalResult green(const Vec4& x, const Vec4& y, const AnnulusGeometry& geom,
                 const SeriesControl& ctrl) {
  check_not_singular(x, y);
  EvalResult r = regular_part(x, y, geom, ctrl);
  r.value = 1.0 / (2.0 * constants::omega * norm2(x - y)) - r.value;
  return r;
}

GradResult grad_green(const Vec4& x, const Vec4& y, const AnnulusGeometry& geom,
                      const SeriesControl& ctrl) {
  ctrl.validate();
  check_not_singular(x, y);
  const PairGeometry g = pair_geometry(x, y, geom);
  const double rho = geom.rho_in();
  RadialTerms terms(g.s, g.t, rho);
  double p_prev = 0.0;
  double p_cur = 1.0;
  double d_prev = 0.0;
  double d_cur = 0.0;
  double radial = 0.0;
  double angular = 0.0;
  GradResult r;
  r.tail_bound = kInf;
  for (int m = 0; m < ctrl.max_terms; ++m) {
    double q = 0.0;
    double dq = 0.0;
    terms.next(m, q, dq);
    radial += dq * (m + 1) * p_cur;
    angular += q * (m + 1) * d_cur;
    const double p_next = 2.0 * g.c * p_cur - p_prev;
    const double d_next = 2.0 * p_cur + 2.0 * g.c * d_cur - d_prev;
    p_prev = p_cur;
    p_cur = p_next;
    d_prev = d_cur;
    d_cur = d_next;
    r.terms_used = m + 1;
    if (m % kTailStride == kTailStride - 1 || m + 1 == ctrl.max_terms) {
      r.tail_bound = gradient_tail(g.s, g.t, rho, m);
      if (r.tail_bound <= ctrl.target_tol) break;
    }
  }
  r.degraded = !(r.tail_bound <= ctrl.target_tol);

  const Vec4 tangential = (g.yhat - g.c * g.xhat) * (1.0 / g.s);
  const Vec4 grad_h = (radial * g.xhat + angular * tangential) * (1.0 / constants::omega);
  const Vec4 diff = x - y;
  const double d2 = norm2(diff);
  const Vec4 grad_singular = diff * (-1.0 / (constants::omega * d2 * d2));
  r.gradient = grad_singular - grad_h;
  return r;
}

EvalResult robin_radial(double s, const AnnulusGeometry& geom, const SeriesControl& ctrl) {
  ctrl.validate();
  const double rho = geom.rho_in();
  open_radius(s, rho, "Robin");
  RadialTerms terms(s, s, rho);
  double sum = 0.0;
  EvalResult r;
  r.tail_bound = kInf;
  for (int m = 0; m < ctrl.max_terms; ++m) {
    double q = 0.0;
    double dq = 0.0;
    terms.next(m, q, dq);
    const double dm = (m + 1.0) * (m + 1.0);
    sum += dm * q;
    r.terms_used = m + 1;
    if (m % kTailStride == kTailStride - 1 || m + 1 == ctrl.max_terms) {
      r.tail_bound = value_tail(s, s, rho, m);
      if (r.tail_bound <= ctrl.target_tol) break;
    }
  }
  r.value = sum / constants::omega;
  r.degraded = !(r.tail_bound <= ctrl.target_tol);
  return r;
}

EvalResult robin(const Vec4& x, const AnnulusGeometry& geom, const SeriesControl& ctrl) {
  return robin_radial(norm(x), geom, ctrl);
}

EvalResult robin_radial_derivative(double s, const AnnulusGeometry& geom,
                                   const SeriesControl& ctrl) {
  ctrl.validate();
  const double rho = geom.rho_in();
  open_radius(s, rho, "Robin");
  RadialTerms terms(s, s, rho);
  double sum = 0.0;
  EvalResult r;
  r.tail_bound = kInf;
  for (int m = 0; m < ctrl.max_terms; ++m) {
    double q = 0.0;
    double dq = 0.0;
    terms.next(m, q, dq);
    // d/ds Q_m(s, s) is twice the partial derivative in one radius.
    sum += 2.0 * (m + 1.0) * (m + 1.0) * dq;
    r.terms_used = m + 1;
    if (m % kTailStride == kTailStride - 1 || m + 1 == ctrl.max_terms) {
      r.tail_bound = robin_gradient_tail(s, rho, m);
      if (r.tail_bound <= ctrl.target_tol) break;
    }
  }
  r.value = sum / constants::omega;
  r.degraded = !(r.tail_bound <= ctrl.target_tol);
  return r;
}

GradResult grad_robin(const Vec4& x, const AnnulusGeometry& geom, const SeriesControl& ctrl) {
  const double s = norm(x);
  const EvalResult d = robin_radial_derivative(s, geom, ctrl);
  GradResult r;
  r.gradient = x * (d.value / s);
  r.tail_bound = d.tail_bound;
  r.terms_used = d.terms_used;
  r.degraded = d.degraded;
  return r;
}

AnnulusOracle::AnnulusOracle(AnnulusGeometry geom, SeriesControl ctrl)
    : geom_(geom), ctrl_(ctrl) {
  ctrl_.validate();
}

EvalResult AnnulusOracle::green(const Vec4& x, const Vec4& y) const {
  return brl::green(x, y, geom_, ctrl_);
}

EvalResult AnnulusOracle::regular_part(const Vec4& x, const Vec4& y) const {
  return brl::regular_part(x, y, geom_, ctrl_);
}

EvalResult AnnulusOracle::robin(const Vec4& x) const { return brl::robin(x, geom_, ctrl_); }

GradResult AnnulusOracle::grad_green(const Vec4& x, const Vec4& y) const {
  return brl::grad_green(x, y, geom_, ctrl_);
}

GradResult AnnulusOracle::grad_robin(const Vec4& x) const {
  return brl::grad_robin(x, geom_, ctrl_);
}

double AnnulusOracle::boundary_distance(const Vec4& x) const {
  return geom_.boundary_distance(x);
}

std::string AnnulusOracle::describe() const {
  return "annulus rho_in=" + fmt(geom_.rho_in()) + " max_terms=" + std::to_string(ctrl_.max_terms) +
         " target_tol=" + fmt(ctrl_.target_tol);
}

}  // namespace brl
