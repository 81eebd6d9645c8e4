#include "brl/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "brl/errors.hpp"

namespace brl {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<double> Matrix::operator*(const std::vector<double>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<double> out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (o.rows_ != cols_) throw std::invalid_argument("matrix-matrix size mismatch");
  Matrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      const double a = (*this)(i, l);
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(l, j);
    }
  return out;
}

double Matrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

double Matrix::norm_frobenius() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

SymmetricEigen symmetric_eigen(const Matrix& input, int max_sweeps) {
  const std::size_t n = input.rows();
  if (input.cols() != n) throw std::invalid_argument("symmetric_eigen: matrix not square");

  Matrix a = input;
  Matrix v = Matrix::identity(n);
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    double diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      diag += a(i, i) * a(i, i);
      for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    }
    if (off == 0.0 || off <= 1e-36 * diag) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t r = 0; r < n; ++r) {
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(r, q) = s * arp + c * arq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double apr = a(p, r);
          const double aqr = a(q, r);
          a(p, r) = c * apr - s * aqr;
          a(q, r) = s * apr + c * aqr;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  SymmetricEigen out;
  out.sweeps = sweep;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    out.values[col] = a(order[col], order[col]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, col) = v(r, order[col]);
  }
  return out;
}

namespace {

// In-place LU with partial pivoting; returns the permutation sign, 0 if singular.
int lu_decompose(Matrix& a, std::vector<std::size_t>& perm) {
  const std::size_t n = a.rows();
  perm.resize(n);
  std::iota(perm.begin(), perm.end(), 0);
  int sign = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (a(pivot, col) == 0.0) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      std::swap(perm[pivot], perm[col]);
      sign = -sign;
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      a(r, col) = f;
      for (std::size_t j = col + 1; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return sign;
}

}  // namespace

double determinant(const Matrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant: matrix not square");
  if (input.rows() == 0) return 1.0;
  Matrix a = input;
  std::vector<std::size_t> perm;
  const int sign = lu_decompose(a, perm);
  if (sign == 0) return 0.0;
  double det = sign;
  for (std::size_t i = 0; i < a.rows(); ++i) det *= a(i, i);
  return det;
}

std::vector<double> solve(const Matrix& input, const std::vector<double>& b) {
  const std::size_t n = input.rows();
  if (input.cols() != n || b.size() != n) throw std::invalid_argument("solve: size mismatch");
  Matrix a = input;
  std::vector<std::size_t> perm;
  if (lu_decompose(a, perm) == 0) throw NumericalError("solve: singular matrix");
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[perm[i]];
    for (std::size_t j = 0; j < i; ++j) s -= a(i, j) * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

double norm2(const std::vector<double>& v) { return std::sqrt(dot(v, v)); }

double norm_inf(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

wide_real wabs(wide_real x) { return x < 0 ? -x : x; }

// Square root refined from the long double estimate by Newton steps.
wide_real wsqrt(wide_real x) {
  if (!(x > 0)) return 0;
  wide_real r = std::sqrt(static_cast<long double>(x));
  for (int i = 0; i < 2; ++i) r = (r + x / r) / 2;
  return r;
}

#if defined(__SIZEOF_FLOAT128__)
constexpr wide_real kWideEpsilon = 1.9259299443872359e-34;  // 2^-112
#else
constexpr wide_real kWideEpsilon = std::numeric_limits<long double>::epsilon();
#endif

}  // namespace

ExtendedLu lu_extended(std::vector<wide_real> a, std::size_t n) {
  if (a.size() != n * n) throw std::invalid_argument("lu_extended: size mismatch");
  ExtendedLu f;
  f.n = n;
  f.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (wabs(a[r * n + c]) > wabs(a[piv * n + c])) piv = r;
    if (a[piv * n + c] == 0) {
      f.sign = 0;
      continue;
    }
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[c * n + j], a[piv * n + j]);
      std::swap(f.perm[c], f.perm[piv]);
      f.sign = -f.sign;
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      const wide_real l = a[r * n + c] / a[c * n + c];
      a[r * n + c] = l;
      for (std::size_t j = c + 1; j < n; ++j) a[r * n + j] -= l * a[c * n + j];
    }
  }
  f.lu = std::move(a);
  return f;
}

wide_real determinant_extended(const std::vector<wide_real>& a, std::size_t n) {
  const ExtendedLu f = lu_extended(a, n);
  if (f.sign == 0) return 0;
  wide_real det = f.sign;
  for (std::size_t i = 0; i < n; ++i) det *= f.lu[i * n + i];
  return det;
}

namespace {

std::vector<wide_real> lu_solve(const ExtendedLu& f, const std::vector<wide_real>& b) {
  const std::size_t n = f.n;
  std::vector<wide_real> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    wide_real s = b[f.perm[i]];
    for (std::size_t j = 0; j < i; ++j) s -= f.lu[i * n + j] * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    wide_real s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= f.lu[i * n + j] * x[j];
    x[i] = s / f.lu[i * n + i];
  }
  return x;
}

wide_real norm_ld(const std::vector<wide_real>& v) {
  wide_real s = 0;
  for (wide_real x : v) s += x * x;
  return wsqrt(s);
}

}  // namespace

std::vector<wide_real> solve_extended(const std::vector<wide_real>& a, std::size_t n,
                                        const std::vector<wide_real>& b) {
  if (b.size() != n) throw std::invalid_argument("solve_extended: size mismatch");
  const ExtendedLu f = lu_extended(a, n);
  if (f.sign == 0) throw NumericalError("solve_extended: singular matrix");
  return lu_solve(f, b);
}

ExtendedEigenpair refine_eigenpair(const Matrix& a, double value, const std::vector<double>& vector,
                                   double max_shift, int max_iter) {
  const std::size_t n = a.rows();
  if (a.cols() != n || vector.size() != n) throw std::invalid_argument("refine_eigenpair: size mismatch");
  auto apply = [&](const std::vector<wide_real>& v) {
    std::vector<wide_real> out(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i] += static_cast<wide_real>(a(i, j)) * v[j];
    return out;
  };
  auto rayleigh_pair = [&](std::vector<wide_real> v) {
    ExtendedEigenpair p;
    const wide_real nv = norm_ld(v);
    for (auto& x : v) x /= nv;
    const std::vector<wide_real> av = apply(v);
    for (std::size_t i = 0; i < n; ++i) p.value += v[i] * av[i];
    std::vector<wide_real> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = av[i] - p.value * v[i];
    p.residual = norm_ld(r);
    p.vector = std::move(v);
    return p;
  };

  const ExtendedEigenpair start =
      rayleigh_pair(std::vector<wide_real>(vector.begin(), vector.end()));
  ExtendedEigenpair best = start;
  const wide_real floor = 4 * kWideEpsilon * static_cast<wide_real>(a.norm_inf());
  for (int it = 1; it <= max_iter && best.residual > floor; ++it) {
    std::vector<wide_real> shifted(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        shifted[i * n + j] = static_cast<wide_real>(a(i, j)) - (i == j ? best.value : 0);
    ExtendedLu f = lu_extended(std::move(shifted), n);
    // An exact zero pivot means the shift is an eigenvalue to working
    // precision; a tiny pivot still yields the eigenvector direction.
    for (std::size_t i = 0; i < n; ++i)
      if (f.lu[i * n + i] == 0) f.lu[i * n + i] = floor * static_cast<wide_real>(1e-6);
    ExtendedEigenpair next = rayleigh_pair(lu_solve(f, best.vector));
    if (!std::isfinite(static_cast<double>(next.value))) break;
    if (wabs(next.value - static_cast<wide_real>(value)) > max_shift) break;
    wide_real align = 0;
    for (std::size_t i = 0; i < n; ++i) align += next.vector[i] * best.vector[i];
    if (align < 0)
      for (auto& x : next.vector) x = -x;
    next.iterations = it;
    next.refined = true;
    if (next.residual >= best.residual) break;
    best = std::move(next);
  }
  return best;
}

}  // namespace brl
