#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "vqge/errors.hpp"

namespace vqge {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. The workhorse value type for pencils,
/// gate payloads and oracle computations. Entries must stay finite; the
/// factory methods and file reader enforce that, arithmetic assumes it.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {
    if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be >= 1");
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<cplx>& data() { return data_; }
  const std::vector<cplx>& data() const { return data_; }

  bool all_finite() const;

  ComplexMatrix operator+(const ComplexMatrix& other) const;
  ComplexMatrix operator-(const ComplexMatrix& other) const;
  ComplexMatrix operator*(cplx scalar) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

/// Standard complex matrix product. Throws ShapeError on inner-dimension mismatch.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);

/// True iff every strictly-lower entry has magnitude <= tol. Square input only.
bool is_upper_triangular(const ComplexMatrix& m, double tol);

/// Kronecker product, a acting on the more significant index block.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& m);

/// max-entry magnitude of (m† m - I); 0 for an exactly unitary matrix.
double unitarity_residual(const ComplexMatrix& m);

}  // namespace vqge
