#pragma once

#include <vector>

namespace brl {

// Gegenbauer polynomial P^1_m(t) (Chebyshev polynomial of the second kind).
double gegenbauer_p1(int m, double t);

// d/dt P^1_m(t), from the differentiated three-term recurrence.
double gegenbauer_p1_derivative(int m, double t);

// True iff |P^1_m(-t) - (-1)^m P^1_m(t)| <= 1e-12.
bool gegenbauer_parity_check(int m, double t);

// Degree-m zonal harmonic on the 3-sphere: (m+1) P^1_m(cos_angle).
double zonal_z(int m, double cos_angle);

// Values P^1_0..P^1_n at one fixed argument, extended on demand.
// Not thread-safe while growing; share only after reserve() or keep per thread.
class GegenbauerEvaluator {
 public:
  explicit GegenbauerEvaluator(double t);

  double argument() const { return t_; }
  int max_degree() const { return static_cast<int>(values_.size()) - 1; }

  // Ensures degrees 0..m are cached.
  void reserve(int m);

  double value(int m);
  double derivative(int m);

  const std::vector<double>& values() const { return values_; }

 private:
  double t_;
  std::vector<double> values_;
  std::vector<double> derivs_;
};

}  // namespace brl
