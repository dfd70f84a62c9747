#pragma once

// Dense complex matrices and the Hermitian eigensolver shared by the
// closed-form code paths and the brute-force oracle.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace sc {

using Complex = std::complex<double>;

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> data() const noexcept { return data_; }

  DenseMatrix adjoint() const;
  DenseMatrix transpose() const;
  Complex trace() const;

  // Largest |a_rc - conj(a_cr)|.
  double hermiticity_defect() const;
  double max_abs() const;
  double frobenius_norm() const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(Complex s, const DenseMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra);

// Tr(a * b) without forming the product.
Complex trace_of_product(const DenseMatrix& a, const DenseMatrix& b);

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column j pairs with values[j]
};

struct JacobiOptions {
  double hermitian_tol = 1e-10;
  int max_sweeps = 100;
  double relative_off_tol = 1e-12;
};

// Cyclic complex Jacobi diagonalization. Throws NotHermitian when the input
// defect exceeds `hermitian_tol` and NoConvergence when the off-diagonal norm
// has not dropped below relative_off_tol * ||m||_F after max_sweeps sweeps.
EigenDecomposition hermitian_eigen(const DenseMatrix& m, const JacobiOptions& options = {});

std::vector<double> hermitian_eigenvalues(const DenseMatrix& m, const JacobiOptions& options = {});

}  // namespace sc
