#include "brl/special_functions.hpp"

#include <cmath>
#include <string>

#include "brl/errors.hpp"

namespace brl {

namespace {

void check_args(int m, double t) {
  if (m < 0) throw DomainError("Gegenbauer degree must be nonnegative, got " + std::to_string(m));
  if (!(std::abs(t) <= 1.0))
    throw DomainError("Gegenbauer argument must lie in [-1, 1], got " + std::to_string(t));
}

}  // namespace

double gegenbauer_p1(int m, double t) {
  check_args(m, t);
  double prev = 1.0;
  if (m == 0) return prev;
  double cur = 2.0 * t;
  for (int n = 2; n <= m; ++n) {
    const double next = 2.0 * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double gegenbauer_p1_derivative(int m, double t) {
  check_args(m, t);
  if (m == 0) return 0.0;
  double p_prev = 1.0;
  double p_cur = 2.0 * t;
  double d_prev = 0.0;
  double d_cur = 2.0;
  for (int n = 2; n <= m; ++n) {
    const double d_next = 2.0 * p_cur + 2.0 * t * d_cur - d_prev;
    const double p_next = 2.0 * t * p_cur - p_prev;
    p_prev = p_cur;
    p_cur = p_next;
    d_prev = d_cur;
    d_cur = d_next;
  }
  return d_cur;
}

bool gegenbauer_parity_check(int m, double t) {
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return std::abs(gegenbauer_p1(m, -t) - sign * gegenbauer_p1(m, t)) <= 1e-12;
}

double zonal_z(int m, double cos_angle) {
  return (m + 1) * gegenbauer_p1(m, cos_angle);
}

GegenbauerEvaluator::GegenbauerEvaluator(double t) : t_(t) {
  check_args(0, t);
  values_ = {1.0};
  derivs_ = {0.0};
}

void GegenbauerEvaluator::reserve(int m) {
  if (m < 0) throw DomainError("Gegenbauer degree must be nonnegative");
  values_.reserve(static_cast<std::size_t>(m) + 1);
  derivs_.reserve(static_cast<std::size_t>(m) + 1);
  while (max_degree() < m) {
    const int n = max_degree() + 1;
    if (n == 1) {
      values_.push_back(2.0 * t_);
      derivs_.push_back(2.0);
      continue;
    }
    const double p1 = values_[n - 1];
    const double p2 = values_[n - 2];
    values_.push_back(2.0 * t_ * p1 - p2);
    derivs_.push_back(2.0 * p1 + 2.0 * t_ * derivs_[n - 1] - derivs_[n - 2]);
  }
}

double GegenbauerEvaluator::value(int m) {
  reserve(m);
  return values_[static_cast<std::size_t>(m)];
}

double GegenbauerEvaluator::derivative(int m) {
  reserve(m);
  return derivs_[static_cast<std::size_t>(m)];
}

}  // namespace brl
