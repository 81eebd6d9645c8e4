#include "brl/ring_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "brl/constants.hpp"
#include "brl/errors.hpp"
#include "brl/parallel.hpp"

namespace brl {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void check_ring(const RingConfig& ring, const AnnulusGeometry& geom) {
  if (ring.k < 2) throw DomainError("ring needs k >= 2 points");
  if (!(ring.r > geom.rho_in() && ring.r < 1.0))
    throw DomainError("ring radius " + fmt(ring.r) + " lies outside the open annulus");
}

template <class F>
auto escalate(F&& f, const SeriesControl& ctrl, int cap) {
  SeriesControl c = ctrl;
  const int limit = std::max(cap, ctrl.max_terms);
  for (;;) {
    auto r = f(c);
    if (!r.degraded || c.max_terms >= limit) return std::make_pair(r, c.max_terms);
    c.max_terms = static_cast<int>(std::min<long long>(limit, 4LL * c.max_terms));
  }
}

// cos(2 pi n / k) with the argument reduced exactly.
double cos_frac(std::size_t n, std::size_t k) {
  return std::cos(2.0 * std::numbers::pi * static_cast<double>(n % k) / static_cast<double>(k));
}

double sin_frac(std::size_t n, std::size_t k) {
  return std::sin(2.0 * std::numbers::pi * static_cast<double>(n % k) / static_cast<double>(k));
}

struct GridPoint {
  std::vector<double> eigs;
  double tail = 0.0;
  int terms = 0;
  bool degraded = false;
  PerpendicularSample perp;
};

}  // namespace

std::vector<Vec4> RingConfig::points() const {
  std::vector<Vec4> pts;
  pts.reserve(k);
  for (std::size_t j = 0; j < k; ++j) pts.emplace_back(r * cos_frac(j, k), r * sin_frac(j, k), 0.0, 0.0);
  return pts;
}

Configuration RingConfig::configuration(double sep) const {
  Configuration c;
  c.points = points();
  c.sep = sep;
  return c;
}

CirculantCoeffs circulant_coeffs(const RingConfig& ring, const AnnulusGeometry& geom,
                                 const SeriesControl& ctrl, int cap) {
  check_ring(ring, geom);
  const std::vector<Vec4> pts = ring.points();
  CirculantCoeffs out;
  out.a.resize(ring.k);
  const auto tau = escalate([&](const SeriesControl& c) { return robin(pts[0], geom, c); }, ctrl, cap);
  out.a[0] = tau.first.value;
  out.tail_bound = tau.first.tail_bound;
  out.degraded = tau.first.degraded;
  out.max_terms = tau.second;
  for (std::size_t j = 1; j < ring.k; ++j) {
    const auto g =
        escalate([&](const SeriesControl& c) { return green(pts[0], pts[j], geom, c); }, ctrl, cap);
    out.a[j] = -g.first.value;
    out.tail_bound += g.first.tail_bound;
    out.degraded = out.degraded || g.first.degraded;
    out.max_terms = std::max(out.max_terms, g.second);
  }
  return out;
}

std::vector<double> circulant_eigs(const std::vector<double>& a) {
  const std::size_t k = a.size();
  if (k == 0) throw DomainError("circulant needs at least one coefficient");
  double scale = 0.0;
  for (double v : a) scale += std::abs(v);
  const double tol = 1e-12 * std::max(1.0, scale);
  std::vector<double> eig(k);
  for (std::size_t l = 0; l < k; ++l) {
    double re = 0.0, im = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      re += a[j] * cos_frac(j * l, k);
      im += a[j] * sin_frac(j * l, k);
    }
    if (std::abs(im) > tol)
      throw SymmetryError("circulant eigenvalue " + std::to_string(l + 1) +
                          " has imaginary part " + fmt(im) + "; coefficients lack a_j = a_{k-j}");
    eig[l] = re;
  }
  return eig;
}

EvalResult lambda1_ring(const RingConfig& ring, const AnnulusGeometry& geom,
                        const SeriesControl& ctrl, int cap) {
  const CirculantCoeffs c = circulant_coeffs(ring, geom, ctrl, cap);
  EvalResult r;
  for (double v : c.a) r.value += v;
  r.tail_bound = c.tail_bound;
  r.terms_used = c.max_terms;
  r.degraded = c.degraded;
  return r;
}

std::vector<double> default_r_grid(double rho_in, std::size_t n) {
  if (!(rho_in > 0.0 && rho_in < 1.0)) throw DomainError("inner radius must lie in (0, 1)");
  if (n < 16) throw DomainError("radius grid needs at least 16 points");
  const double w = 1.0 - rho_in;
  const std::size_t ends = n / 8;
  const std::size_t middle = n - 2 * ends;
  const double g_lo = 1e-3, g_hi = 0.05;
  std::vector<double> grid;
  grid.reserve(n);
  for (std::size_t i = 0; i < ends; ++i) {
    const double g = g_lo * std::pow(g_hi / g_lo, static_cast<double>(i) / (ends - 1));
    grid.push_back(rho_in + w * g);
    grid.push_back(1.0 - w * g);
  }
  const double a = rho_in + w * g_hi, b = 1.0 - w * g_hi;
  for (std::size_t i = 0; i < middle; ++i)
    grid.push_back(a + (b - a) * static_cast<double>(i + 1) / static_cast<double>(middle + 1));
  std::sort(grid.begin(), grid.end());
  return grid;
}

PerpendicularSample perpendicular_diagnostic(double r, const AnnulusGeometry& geom,
                                             const SeriesControl& ctrl) {
  const Vec4 x(r, 0.0, 0.0, 0.0), y(0.0, r, 0.0, 0.0);
  const auto g = escalate([&](const SeriesControl& c) { return green(x, y, geom, c); }, ctrl,
                          kMaxTermsCap);
  PerpendicularSample s;
  s.r = r;
  s.g_series = g.first.value;
  s.g_shortcut = 1.0 / (4.0 * constants::omega * r * r);
  s.difference = s.g_series - s.g_shortcut;
  s.tail_bound = g.first.tail_bound;
  return s;
}

RingScan min_over_r(std::size_t k, const AnnulusGeometry& geom, const SeriesControl& ctrl,
                    const ScanOptions& opt) {
  if (k < 2) throw DomainError("ring scan needs k >= 2");
  ctrl.validate();
  RingScan scan;
  scan.k = k;
  scan.rho_in = geom.rho_in();
  scan.r_grid = opt.r_grid.empty() ? default_r_grid(geom.rho_in(), opt.grid_points) : opt.r_grid;
  for (std::size_t i = 0; i < scan.r_grid.size(); ++i) {
    const double r = scan.r_grid[i];
    if (!(r > geom.rho_in() && r < 1.0)) throw DomainError("grid radius " + fmt(r) + " outside the annulus");
    if (i > 0 && !(r > scan.r_grid[i - 1])) throw DomainError("radius grid must be increasing");
  }
  const std::size_t n = scan.r_grid.size();
  const bool perp = k == 4 || opt.perpendicular_columns;

  std::vector<GridPoint> pts(n);
  parallel_for(n, opt.workers, [&](std::size_t i) {
    const CirculantCoeffs c = circulant_coeffs({k, scan.r_grid[i]}, geom, ctrl, opt.max_terms_cap);
    pts[i].eigs = circulant_eigs(c.a);
    pts[i].tail = c.tail_bound;
    pts[i].terms = c.max_terms;
    pts[i].degraded = c.degraded;
    if (perp) pts[i].perp = perpendicular_diagnostic(scan.r_grid[i], geom, ctrl);
  });

  scan.lambda_by_ell.assign(k, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) scan.lambda_by_ell[l][i] = pts[i].eigs[l];
    scan.tail_bound.push_back(pts[i].tail);
    scan.terms_used.push_back(pts[i].terms);
    if (pts[i].degraded) ++scan.degraded_points;
    if (perp) {
      scan.g_perp_series.push_back(pts[i].perp.g_series);
      scan.g_perp_shortcut.push_back(pts[i].perp.g_shortcut);
      if (k == 4) {
        // tau - 2 G(perpendicular) - G(antipodal) with the shortcut value.
        const double a0_plus_a2 = pts[i].eigs[0] + 2.0 * pts[i].perp.g_series;
        scan.lambda1_shortcut.push_back(a0_plus_a2 - 2.0 * pts[i].perp.g_shortcut);
      }
    }
  }

  const std::vector<double>& l1 = scan.lambda_by_ell[0];
  scan.grid_argmin = static_cast<std::size_t>(std::min_element(l1.begin(), l1.end()) - l1.begin());
  if (scan.grid_argmin == 0 || scan.grid_argmin + 1 == n) {
    std::ostringstream os;
    os << "no interior minimum of Lambda_1 over r for k=" << k << ", rho_in=" << geom.rho_in()
       << ": grid minimum " << l1[scan.grid_argmin] << " at endpoint r=" << scan.r_grid[scan.grid_argmin]
       << " (values at ends " << l1.front() << ", " << l1.back() << ")";
    throw ScanError(os.str());
  }

  // Golden-section refinement inside the neighbouring cells.
  const auto f = [&](double r) { return lambda1_ring({k, r}, geom, ctrl, opt.max_terms_cap); };
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = scan.r_grid[scan.grid_argmin - 1];
  double b = scan.r_grid[scan.grid_argmin + 1];
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  EvalResult fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && (b - a) > opt.golden_tol; ++it) {
    if (fc.value < fd.value) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  const EvalResult best = fc.value < fd.value ? fc : fd;
  const double best_r = fc.value < fd.value ? c : d;
  if (best.value <= l1[scan.grid_argmin]) {
    scan.argmin_r = best_r;
    scan.min_value = best.value;
    scan.min_tail = best.tail_bound;
  } else {
    scan.argmin_r = scan.r_grid[scan.grid_argmin];
    scan.min_value = l1[scan.grid_argmin];
    scan.min_tail = scan.tail_bound[scan.grid_argmin];
  }
  return scan;
}

ThresholdResult threshold_rho(std::size_t k, const SeriesControl& ctrl,
                              const ThresholdOptions& opt) {
  if (!(opt.rho_lo > 0.0 && opt.rho_lo < opt.rho_hi && opt.rho_hi < 1.0))
    throw DomainError("threshold search range must satisfy 0 < lo < hi < 1");
  if (!(opt.tol > 0.0)) throw DomainError("bisection tolerance must be positive");
  ThresholdResult res;
  res.k = k;

  const auto probe = [&](double rho) {
    const AnnulusGeometry geom(rho);
    RingScan scan = min_over_r(k, geom, ctrl, opt.scan);
    ThresholdSample s{rho, scan.min_value, scan.min_tail, scan.argmin_r, true};
    if (!(scan.min_tail < std::abs(scan.min_value) / 10.0)) {
      // Tighten the series until the sign is resolved, if possible.
      SeriesControl tight = ctrl;
      tight.target_tol = std::max(std::abs(scan.min_value) / 100.0, 1e-15);
      tight.max_terms = std::max(ctrl.max_terms, 4 * ctrl.max_terms);
      scan = min_over_r(k, geom, tight, opt.scan);
      s = {rho, scan.min_value, scan.min_tail, scan.argmin_r,
           scan.min_tail < std::abs(scan.min_value) / 10.0};
      if (!s.sign_certain)
        res.warnings.push_back("sign of min Lambda_1 at rho=" + fmt(rho) +
                               " not resolved beyond the series tail");
    }
    res.samples.push_back(s);
    return s;
  };

  ThresholdSample lo = probe(opt.rho_lo);
  ThresholdSample hi = probe(opt.rho_hi);
  const bool lo_pos = lo.min_value > 0.0;
  const bool hi_pos = hi.min_value > 0.0;
  if (lo_pos == hi_pos || (lo_pos && !hi_pos)) {
    res.one_signed = lo_pos == hi_pos;
    res.sign = lo_pos ? 1 : -1;
    res.bracket_lo = opt.rho_lo;
    res.bracket_hi = opt.rho_hi;
    res.bracket_width = opt.rho_hi - opt.rho_lo;
    res.min_at_lo = lo.min_value;
    res.min_at_hi = hi.min_value;
    res.rho_star = lo_pos ? opt.rho_lo : opt.rho_hi;
    if (res.one_signed)
      res.warnings.push_back(std::string("min Lambda_1 is ") + (lo_pos ? "positive" : "nonpositive") +
                             " on the whole search range; no threshold inside it");
    else
      res.warnings.push_back("min Lambda_1 is positive at the low end and nonpositive at the high end");
    return res;
  }

  double a = opt.rho_lo, b = opt.rho_hi;
  double fa = lo.min_value, fb = hi.min_value;
  while (b - a > opt.tol) {
    const double mid = 0.5 * (a + b);
    const ThresholdSample s = probe(mid);
    if (s.min_value > 0.0) {
      b = mid;
      fb = s.min_value;
    } else {
      a = mid;
      fa = s.min_value;
    }
  }
  res.bracket_lo = a;
  res.bracket_hi = b;
  res.bracket_width = b - a;
  res.rho_star = 0.5 * (a + b);
  res.min_at_lo = fa;
  res.min_at_hi = fb;
  return res;
}

bool sufficient_inequality(std::size_t k, double rho, double r) {
  double ck = 0.0;
  if (k == 2) ck = 1.0;
  else if (k == 4) ck = 5.0;
  else throw DomainError("sufficient condition is available for k = 2 and k = 4 only");
  const double rho2 = rho * rho, r2 = r * r, r4 = r2 * r2;
  const double lhs = (8.0 * rho2 - 16.0 * rho2 * r2 + 8.0 * r4) / (r4 * (1.0 - rho2));
  return lhs > ck / r2;
}

SufficientConditionReport sufficient_condition_check(std::size_t k, double rho_in,
                                                     const std::vector<double>& r_grid,
                                                     const SeriesControl& ctrl, unsigned workers) {
  const AnnulusGeometry geom(rho_in);
  const double ck = k == 2 ? 1.0 : (k == 4 ? 5.0 : 0.0);
  if (ck == 0.0) throw DomainError("sufficient condition is available for k = 2 and k = 4 only");
  SufficientConditionReport rep;
  rep.k = k;
  rep.rho_in = rho_in;
  rep.r_grid = r_grid;
  const std::size_t n = r_grid.size();
  rep.inequality.resize(n);
  rep.lower_bound.resize(n);
  rep.lambda1.resize(n);
  rep.tail_bound.resize(n);
  rep.chain_holds.resize(n);
  std::vector<char> holds(n), chain(n);
  parallel_for(n, workers, [&](std::size_t i) {
    const double r = r_grid[i];
    holds[i] = sufficient_inequality(k, rho_in, r);
    rep.lower_bound[i] =
        (-ck / (8.0 * r * r) + 2.0 * q_m_diag(0, r, geom)) / constants::omega;
    const EvalResult l1 = lambda1_ring({k, r}, geom, ctrl);
    rep.lambda1[i] = l1.value;
    rep.tail_bound[i] = l1.tail_bound;
    chain[i] = l1.value >= rep.lower_bound[i] - l1.tail_bound;
  });
  rep.all_hold = true;
  for (std::size_t i = 0; i < n; ++i) {
    rep.inequality[i] = holds[i] != 0;
    rep.chain_holds[i] = chain[i] != 0;
    rep.all_hold = rep.all_hold && rep.inequality[i];
    if (!rep.chain_holds[i]) ++rep.chain_violations;
  }
  return rep;
}

PerpendicularReport perpendicular_report(const RingScan& scan, const AnnulusGeometry& geom,
                                         const SeriesControl& ctrl) {
  if (scan.k != 4 || scan.g_perp_series.size() != scan.r_grid.size())
    throw DomainError("perpendicular report needs a k = 4 scan with perpendicular columns");
  PerpendicularReport rep;
  rep.rho_in = scan.rho_in;
  bool agree = true;
  for (std::size_t i = 0; i < scan.r_grid.size(); ++i) {
    PerpendicularSample s = perpendicular_diagnostic(scan.r_grid[i], geom, ctrl);
    rep.max_abs_difference = std::max(rep.max_abs_difference, std::abs(s.difference));
    rep.max_rel_difference =
        std::max(rep.max_rel_difference, std::abs(s.difference) / std::abs(s.g_shortcut));
    if (std::abs(s.difference) > 10.0 * s.tail_bound) agree = false;
    rep.samples.push_back(s);
  }
  rep.shortcut_agrees = agree;
  rep.min_lambda1_series = scan.min_value;
  rep.argmin_series = scan.argmin_r;
  const auto it = std::min_element(scan.lambda1_shortcut.begin(), scan.lambda1_shortcut.end());
  rep.min_lambda1_shortcut = *it;
  rep.argmin_shortcut = scan.r_grid[static_cast<std::size_t>(it - scan.lambda1_shortcut.begin())];
  rep.positivity_confirmed = scan.min_value > 0.0 && scan.min_tail < std::abs(scan.min_value) / 10.0;

  std::ostringstream os;
  os.precision(10);
  os << "k=4 ring on rho_in=" << scan.rho_in << ": ";
  if (agree) {
    os << "series G at perpendicular points matches 1/(4 omega r^2) within tail bounds";
  } else {
    os << "DISCREPANCY: series G at perpendicular points differs from 1/(4 omega r^2) "
       << "(max abs " << rep.max_abs_difference << ", max rel " << rep.max_rel_difference
       << "); the regular part at perpendicular points is nonzero because P^1_m(0) != 0 for even m";
  }
  os << "; min Lambda_1 series " << rep.min_lambda1_series << " at r=" << rep.argmin_series
     << ", shortcut " << rep.min_lambda1_shortcut << " at r=" << rep.argmin_shortcut
     << "; positivity " << (rep.positivity_confirmed ? "confirmed" : "NOT confirmed");
  rep.summary = os.str();
  return rep;
}

}  // namespace brl
