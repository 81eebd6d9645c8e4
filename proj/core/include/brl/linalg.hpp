#pragma once

#include <cstddef>
#include <vector>

namespace brl {

// Dense row-major matrix for the small systems used throughout (k <= 64).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }

  Matrix transpose() const;
  std::vector<double> operator*(const std::vector<double>& v) const;
  Matrix operator*(const Matrix& o) const;

  // Largest absolute row sum.
  double norm_inf() const;
  double norm_frobenius() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column j pairs with values[j], unit length
  int sweeps = 0;
};

// Cyclic Jacobi rotations; input must be square and symmetric.
SymmetricEigen symmetric_eigen(const Matrix& a, int max_sweeps = 100);

// LU with partial pivoting.
double determinant(const Matrix& a);

// Solves a x = b with partial pivoting; throws NumericalError if singular.
std::vector<double> solve(const Matrix& a, const std::vector<double>& b);

// Extended precision for the few places where double loses the relative
// accuracy of small eigenvector components.
#if defined(__SIZEOF_FLOAT128__)
using wide_real = __float128;
#else
using wide_real = long double;
#endif

// Extended-precision helpers. Row-major n x n storage.
struct ExtendedLu {
  std::vector<wide_real> lu;
  std::vector<std::size_t> perm;
  std::size_t n = 0;
  int sign = 1;  // 0 when an exact zero pivot was met
};
ExtendedLu lu_extended(std::vector<wide_real> a, std::size_t n);
wide_real determinant_extended(const std::vector<wide_real>& a, std::size_t n);
// Throws NumericalError if singular.
std::vector<wide_real> solve_extended(const std::vector<wide_real>& a, std::size_t n,
                                      const std::vector<wide_real>& b);

struct ExtendedEigenpair {
  wide_real value = 0;
  std::vector<wide_real> vector;  // unit length
  wide_real residual = 0;         // ||A v - value v||_2
  int iterations = 0;
  bool refined = false;             // false: the starting pair was kept
};

// Rayleigh-quotient inverse iteration in extended precision from an approximate
// eigenpair of a symmetric matrix. The starting pair is kept if the
// iteration drifts by more than max_shift from the starting value.
ExtendedEigenpair refine_eigenpair(const Matrix& a, double value, const std::vector<double>& vector,
                                   double max_shift, int max_iter = 6);

double norm2(const std::vector<double>& v);
double norm_inf(const std::vector<double>& v);
double dot(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace brl
