#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace brl {

// Point or displacement in R^4.
struct Vec4 {
  std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};

  constexpr Vec4() = default;
  constexpr Vec4(double a, double b, double d, double e) : c{a, b, d, e} {}

  constexpr double& operator[](std::size_t i) { return c[i]; }
  constexpr double operator[](std::size_t i) const { return c[i]; }

  Vec4& operator+=(const Vec4& o) {
    for (std::size_t i = 0; i < 4; ++i) c[i] += o.c[i];
    return *this;
  }
  Vec4& operator-=(const Vec4& o) {
    for (std::size_t i = 0; i < 4; ++i) c[i] -= o.c[i];
    return *this;
  }
  Vec4& operator*=(double s) {
    for (auto& v : c) v *= s;
    return *this;
  }

  friend Vec4 operator+(Vec4 a, const Vec4& b) { return a += b; }
  friend Vec4 operator-(Vec4 a, const Vec4& b) { return a -= b; }
  friend Vec4 operator*(Vec4 a, double s) { return a *= s; }
  friend Vec4 operator*(double s, Vec4 a) { return a *= s; }
  friend Vec4 operator-(Vec4 a) { return a *= -1.0; }
  friend bool operator==(const Vec4& a, const Vec4& b) = default;
};

inline double dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

inline double norm(const Vec4& a) { return std::sqrt(dot(a, a)); }

inline double norm2(const Vec4& a) { return dot(a, a); }

inline double distance(const Vec4& a, const Vec4& b) { return norm(a - b); }

inline Vec4 unit_axis(std::size_t axis) {
  Vec4 v;
  v[axis] = 1.0;
  return v;
}

}  // namespace brl
