#include "brl/critical_search.hpp"

#include <cmath>
#include <sstream>

#include "brl/errors.hpp"
#include "brl/linalg.hpp"

namespace brl {

namespace {

struct LinePoint {
  bool admissible = false;
  double value = 0.0;
  double slope = 0.0;
  std::vector<double> grad;  // point-major
  Configuration config;
};

std::vector<double> flat_gradient(const Configuration& config, const GreenOracle& oracle,
                                  const std::optional<SymmetryGroup>& sym) {
  std::vector<Vec4> g = lambda1_gradient_by_point(config, oracle);
  if (sym) g = sym->project(g);
  std::vector<double> flat;
  flat.reserve(4 * g.size());
  for (const auto& p : g)
    for (std::size_t a = 0; a < 4; ++a) flat.push_back(p[a]);
  return flat;
}

Configuration symmetrized(const Configuration& c, const std::optional<SymmetryGroup>& sym) {
  if (!sym) return c;
  Configuration out = c;
  out.points = sym->project(c.points);
  return out;
}

class LineFunction {
 public:
  LineFunction(const std::vector<double>& x0, const std::vector<double>& dir,
               const Configuration& base, const GreenOracle& oracle,
               const std::optional<SymmetryGroup>& sym)
      : x0_(x0), dir_(dir), base_(base), oracle_(oracle), sym_(sym) {}

  LinePoint at(double alpha) const {
    std::vector<double> x = x0_;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += alpha * dir_[i];
    LinePoint p;
    p.config = symmetrized(with_points(base_, x), sym_);
    if (!is_admissible(p.config, oracle_)) return p;
    p.admissible = true;
    p.value = smallest_eigen(assemble_m(p.config, oracle_)).lambda1;
    p.grad = flat_gradient(p.config, oracle_, sym_);
    p.slope = dot(p.grad, dir_);
    return p;
  }

 private:
  const std::vector<double>& x0_;
  const std::vector<double>& dir_;
  const Configuration& base_;
  const GreenOracle& oracle_;
  const std::optional<SymmetryGroup>& sym_;
};

}  // namespace

const char* to_string(Stability s) {
  switch (s) {
    case Stability::StrictMinimum: return "strict_minimum";
    case Stability::DegenerateNonNegative: return "degenerate_nonnegative";
    case Stability::Saddle: return "saddle";
    case Stability::DegenerateNonPositive: return "degenerate_nonpositive";
    case Stability::StrictMaximum: return "strict_maximum";
    case Stability::Unavailable: return "unavailable";
  }
  return "unknown";
}

Stability classify_spectrum(const std::vector<double>& ev, double thr) {
  if (ev.empty()) return Stability::Unavailable;
  int pos = 0, neg = 0, zero = 0;
  for (double v : ev) {
    if (v > thr) ++pos;
    else if (v < -thr) ++neg;
    else ++zero;
  }
  if (pos > 0 && neg > 0) return Stability::Saddle;
  if (neg == 0 && zero == 0) return Stability::StrictMinimum;
  if (pos == 0 && zero == 0) return Stability::StrictMaximum;
  if (neg == 0) return Stability::DegenerateNonNegative;
  return Stability::DegenerateNonPositive;
}

Matrix fd_hessian(const Configuration& config, const GreenOracle& oracle,
                  const std::vector<std::vector<double>>& basis, double step) {
  const std::size_t n = basis.size();
  const std::vector<double> x0 = flatten_points(config);
  std::vector<std::vector<double>> dg(n);
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<double> xp = x0, xm = x0;
    for (std::size_t i = 0; i < x0.size(); ++i) {
      xp[i] += step * basis[b][i];
      xm[i] -= step * basis[b][i];
    }
    const Configuration cp = with_points(config, xp);
    const Configuration cm = with_points(config, xm);
    require_admissible(cp, oracle);
    require_admissible(cm, oracle);
    const std::vector<double> gp = flat_gradient(cp, oracle, std::nullopt);
    const std::vector<double> gm = flat_gradient(cm, oracle, std::nullopt);
    dg[b].resize(x0.size());
    for (std::size_t i = 0; i < x0.size(); ++i) dg[b][i] = (gp[i] - gm[i]) / (2.0 * step);
  }
  Matrix h(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) h(a, b) = dot(basis[a], dg[b]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const double avg = 0.5 * (h(a, b) + h(b, a));
      h(a, b) = avg;
      h(b, a) = avg;
    }
  return h;
}

SearchResult critical_search(const Configuration& initial, const GreenOracle& oracle,
                             const SearchControls& ctl) {
  if (ctl.symmetry && ctl.symmetry->points() != initial.size())
    throw DomainError("symmetry group acts on a different number of points");
  require_admissible(initial, oracle);

  SearchResult res;
  Configuration current = symmetrized(initial, ctl.symmetry);
  require_admissible(current, oracle);
  double value = smallest_eigen(assemble_m(current, oracle)).lambda1;
  std::vector<double> grad = flat_gradient(current, oracle, ctl.symmetry);
  res.history.push_back({0, value, norm2(grad), 0.0, false});

  int iter = 0;
  for (; iter < ctl.max_iter; ++iter) {
    const double gn = norm2(grad);
    if (gn <= ctl.grad_tol) {
      res.converged = true;
      break;
    }
    std::vector<double> dir(grad.size());
    for (std::size_t i = 0; i < grad.size(); ++i) dir[i] = -grad[i];
    const std::vector<double> x0 = flatten_points(current);
    const LineFunction line(x0, dir, current, oracle, ctl.symmetry);

    // Expand until the directional derivative turns nonnegative or the
    // admissible set ends.
    double lo = 0.0;
    double slope_lo = -gn * gn;
    double alpha = ctl.initial_step / gn;
    LinePoint hi_pt;
    bool bracketed = false;
    bool hit = false;
    LinePoint candidate;
    for (int e = 0; e < 60; ++e) {
      LinePoint p = line.at(alpha);
      if (!p.admissible) {
        double a_in = lo, a_out = alpha;
        for (int b = 0; b < 60 && a_out - a_in > 1e-14 * a_out; ++b) {
          const double mid = 0.5 * (a_in + a_out);
          if (line.at(mid).admissible) a_in = mid;
          else a_out = mid;
        }
        hit = true;
        candidate = line.at(a_in);
        alpha = a_in;
        break;
      }
      if (p.slope >= 0.0) {
        hi_pt = std::move(p);
        bracketed = true;
        break;
      }
      lo = alpha;
      slope_lo = p.slope;
      candidate = std::move(p);
      alpha *= 2.0;
    }

    if (bracketed) {
      // Illinois iteration on the directional derivative.
      double a = lo, fa = slope_lo;
      double b = alpha, fb = hi_pt.slope;
      LinePoint best = hi_pt;
      double best_alpha = b;
      int side = 0;
      for (int it = 0; it < 80; ++it) {
        const double c = (fb - fa) != 0.0 ? b - fb * (b - a) / (fb - fa) : 0.5 * (a + b);
        const double cc = (c > std::min(a, b) && c < std::max(a, b)) ? c : 0.5 * (a + b);
        LinePoint pc = line.at(cc);
        if (!pc.admissible) break;
        best = pc;
        best_alpha = cc;
        if (std::abs(pc.slope) <= 1e-10 * gn * gn || std::abs(b - a) <= 1e-15 * std::abs(b)) break;
        if ((pc.slope < 0.0) == (fb < 0.0)) {
          b = cc;
          fb = pc.slope;
          if (side == -1) fa *= 0.5;
          side = -1;
        } else {
          a = cc;
          fa = pc.slope;
          if (side == 1) fb *= 0.5;
          side = 1;
        }
      }
      candidate = std::move(best);
      alpha = best_alpha;
    } else if (!hit && !candidate.admissible) {
      throw LineSearchError("line search failed to bracket a minimum along the descent direction");
    }

    // Enforce monotone descent.
    int backtracks = 0;
    while (!(candidate.admissible && candidate.value <= value) && backtracks < 60) {
      alpha *= 0.5;
      candidate = line.at(alpha);
      ++backtracks;
    }
    if (!(candidate.admissible && candidate.value <= value)) {
      if (gn <= 1e3 * ctl.grad_tol) {
        res.message = "line search stalled at rounding level";
        break;
      }
      std::ostringstream os;
      os << "no non-increasing step found at iteration " << iter << " (|grad| = " << gn << ")";
      throw LineSearchError(os.str());
    }

    current = candidate.config;
    value = candidate.value;
    grad = candidate.grad;
    res.boundary_hit = res.boundary_hit || hit;
    res.history.push_back({iter + 1, value, norm2(grad), alpha * gn, hit});
  }

  res.iterations = iter;
  res.config = current;
  res.spectral = smallest_eigen(assemble_m(current, oracle));
  res.grad_norm = norm2(grad);
  if (!res.converged && res.grad_norm <= ctl.grad_tol) res.converged = true;
  if (!res.converged && res.message.empty()) res.message = "iteration limit reached";
  if (res.boundary_hit && res.message.empty()) res.message = "admissible-set boundary reached";

  if (ctl.compute_hessian) {
    try {
      const std::size_t n = 4 * current.size();
      std::vector<std::vector<double>> full(n, std::vector<double>(n, 0.0));
      for (std::size_t i = 0; i < n; ++i) full[i][i] = 1.0;
      res.hessian_full = symmetric_eigen(fd_hessian(current, oracle, full, ctl.hessian_step)).values;
      res.stability_full = classify_spectrum(res.hessian_full, ctl.eigen_threshold);
      if (ctl.symmetry) {
        const auto basis = ctl.symmetry->invariant_basis();
        if (!basis.empty()) {
          res.hessian_reduced =
              symmetric_eigen(fd_hessian(current, oracle, basis, ctl.hessian_step)).values;
          res.stability_reduced = classify_spectrum(res.hessian_reduced, ctl.eigen_threshold);
        }
      } else {
        res.hessian_reduced = res.hessian_full;
        res.stability_reduced = res.stability_full;
      }
    } catch (const Error& e) {
      res.message += (res.message.empty() ? "" : "; ") + std::string("hessian unavailable: ") + e.what();
    }
  }
  return res;
}

}  // namespace brl
