#pragma once

#include <numbers>

namespace brl::constants {

inline constexpr double pi = std::numbers::pi;

// Surface area of the unit 3-sphere.
inline constexpr double omega = 2.0 * pi * pi;

// Normalization of the four-dimensional Aubin-Talenti bubble.
inline constexpr double alpha4 = 2.0 * std::numbers::sqrt2;

// Coefficient of the regular part in the projected-bubble expansion.
inline constexpr double frak_c = 2.0 * alpha4 * omega;

// Exponent scale in the concentration-rate law, 8 pi^2 = 4 omega.
inline constexpr double rate_scale = 8.0 * pi * pi;

}  // namespace brl::constants
