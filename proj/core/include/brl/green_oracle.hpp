#pragma once

#include <string>

#include "brl/vec4.hpp"

namespace brl {

// A truncated-series value with a rigorous bound on the discarded tail.
struct EvalResult {
  double value = 0.0;
  double tail_bound = 0.0;
  int terms_used = 0;
  bool degraded = false;  // tail_bound above the requested tolerance
};

struct GradResult {
  Vec4 gradient;
  double tail_bound = 0.0;
  int terms_used = 0;
  bool degraded = false;
};

// Green/Robin data of a bounded domain in R^4. The interaction layer only
// talks to this interface, so other domains plug in by implementing it.
class GreenOracle {
 public:
  virtual ~GreenOracle() = default;

  // Dirichlet Green's function G(x, y) = 1/(2 omega |x-y|^2) - H(x, y).
  virtual EvalResult green(const Vec4& x, const Vec4& y) const = 0;

  // Regular part H(x, y).
  virtual EvalResult regular_part(const Vec4& x, const Vec4& y) const = 0;

  // Robin function tau(x) = H(x, x).
  virtual EvalResult robin(const Vec4& x) const = 0;

  // Gradient of G in its first argument.
  virtual GradResult grad_green(const Vec4& x, const Vec4& y) const = 0;

  virtual GradResult grad_robin(const Vec4& x) const = 0;

  // Signed distance to the boundary, positive inside.
  virtual double boundary_distance(const Vec4& x) const = 0;

  virtual std::string describe() const = 0;
};

}  // namespace brl
