#include "brl/bubbles.hpp"

#include <array>
#include <cmath>
#include <string>

#include "brl/constants.hpp"
#include "brl/errors.hpp"

namespace brl {

namespace {

void check_delta(double delta) {
  if (!(delta > 0.0)) throw DomainError("bubble scale delta must be positive");
}

// 5-point Gauss-Legendre rule on [-1, 1].
constexpr std::array<double, 5> kNodes{-0.9061798459386640, -0.5384693101056831, 0.0,
                                       0.5384693101056831, 0.9061798459386640};
constexpr std::array<double, 5> kWeights{0.2369268850561891, 0.4786286704993665,
                                         0.5688888888888889, 0.4786286704993665,
                                         0.2369268850561891};

template <class F>
double composite_gauss(F&& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (std::size_t i = 0; i < kNodes.size(); ++i) sum += kWeights[i] * f(mid + 0.5 * h * kNodes[i]);
  }
  return 0.5 * h * sum;
}

}  // namespace

double bubble_u(const BubbleParams& params, const Vec4& x) {
  check_delta(params.delta);
  const double d = params.delta;
  return constants::alpha4 * d / (d * d + norm2(x - params.center));
}

double psi_kernel(int j, const BubbleParams& params, const Vec4& x) {
  check_delta(params.delta);
  if (j < 0 || j > 4) throw DomainError("kernel index must be in 0..4, got " + std::to_string(j));
  const Vec4 y = (x - params.center) * (1.0 / params.delta);
  const double r2 = norm2(y);
  const double denom = (1.0 + r2) * (1.0 + r2);
  double psi = 0.0;
  if (j == 0) psi = constants::alpha4 * (r2 - 1.0) / denom;
  else psi = -2.0 * constants::alpha4 * y[static_cast<std::size_t>(j - 1)] / denom;
  return psi / params.delta;
}

ProjectedBubble projected_bubble(const BubbleParams& params, const Vec4& x,
                                 const GreenOracle& oracle) {
  check_delta(params.delta);
  const EvalResult h = oracle.regular_part(x, params.center);
  ProjectedBubble out;
  out.value = bubble_u(params, x) - constants::frak_c * params.delta * h.value;
  out.tail_bound = constants::frak_c * params.delta * h.tail_bound;
  out.large_delta = params.delta > 0.05;
  return out;
}

RateResult rates(double epsilon, double lambda, const std::vector<double>& d) {
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
  for (double v : d)
    if (!(v > 0.0)) throw DomainError("weights must be positive");

  RateResult out;
  const double log1 = -constants::rate_scale * lambda / epsilon;
  const double delta1 = std::exp(log1);
  const bool under1 = !(delta1 >= kUnderflowFloor);
  out.log_deltas.push_back(log1);
  out.deltas.push_back(under1 ? 0.0 : delta1);
  out.underflow.push_back(under1);
  for (double w : d) {
    const double ld = log1 + std::log(w);
    const double v = delta1 * w;
    const bool under = under1 || !(v >= kUnderflowFloor);
    out.log_deltas.push_back(ld);
    out.deltas.push_back(under ? 0.0 : v);
    out.underflow.push_back(under);
  }
  return out;
}

QuadratureReport radial_identity_quadrature(int panels) {
  if (panels < 1) throw DomainError("panel count must be positive");
  // [0, 1] directly; [1, inf) through r = 1/u, which maps the integrand to
  // (1 - u^2) u / (1 + u^2)^4 on [0, 1].
  const auto inner = [](double r) {
    const double r2 = r * r;
    const double q = 1.0 + r2;
    return (r2 - 1.0) * r2 * r / (q * q * q * q);
  };
  const auto outer = [](double u) {
    const double u2 = u * u;
    const double q = 1.0 + u2;
    return (1.0 - u2) * u / (q * q * q * q);
  };
  QuadratureReport rep;
  rep.panels = panels;
  rep.value = constants::omega *
              (composite_gauss(inner, 0.0, 1.0, panels) + composite_gauss(outer, 0.0, 1.0, panels));
  rep.exact = constants::pi * constants::pi / 6.0;
  rep.deviation = std::abs(rep.value - rep.exact);
  return rep;
}

QuadratureReport quad_identity_check() {
  QuadratureReport prev = radial_identity_quadrature(1);
  for (int panels = 2; panels <= 4096; panels *= 2) {
    QuadratureReport cur = radial_identity_quadrature(panels);
    if (std::abs(cur.value - prev.value) <= 1e-15) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace brl
