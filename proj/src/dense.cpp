#include "sc/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sc/error.hpp"

namespace sc {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorKind::DimMismatch, "entry count " + std::to_string(data_.size()) +
                                            " does not match " + std::to_string(rows_) + "x" +
                                            std::to_string(cols_));
  }
  for (const auto& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorKind::NonFinite, "non-finite matrix entry");
    }
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> values) {
  DenseMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Complex DenseMatrix::trace() const {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) sum += (*this)(i, i);
  return sum;
}

double DenseMatrix::hermiticity_defect() const {
  if (!square()) return INFINITY;
  double worst = 0.0;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return worst;
}

double DenseMatrix::max_abs() const {
  double worst = 0.0;
  for (const auto& z : data_) worst = std::max(worst, std::abs(z));
  return worst;
}

double DenseMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& z : data_) sum += std::norm(z);
  return std::sqrt(sum);
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimMismatch, "matrix product shape mismatch");
  DenseMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorKind::DimMismatch, "matrix sum shape mismatch");
  DenseMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorKind::DimMismatch, "matrix difference shape mismatch");
  DenseMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

DenseMatrix operator*(Complex s, const DenseMatrix& a) {
  DenseMatrix out = a;
  for (auto& z : out.data_) z *= s;
  return out;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

DenseMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra) {
  DenseMatrix out(ket.size(), bra.size());
  for (std::size_t i = 0; i < ket.size(); ++i)
    for (std::size_t j = 0; j < bra.size(); ++j) out(i, j) = ket[i] * std::conj(bra[j]);
  return out;
}

Complex trace_of_product(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw Error(ErrorKind::DimMismatch, "trace of product shape mismatch");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) sum += a(i, k) * b(k, i);
  return sum;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimMismatch, "comparison shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  double sum = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) sum += std::norm(a(r, c));
  return std::sqrt(sum);
}

// Zeroes a(p,q) with J = diag(1, conj(e)) * [[c, s], [-s, c]] where e is the
// phase of a(p,q); the phase factor makes the pivot real so the classical
// real rotation applies.
void rotate(DenseMatrix& a, DenseMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const Complex e = apq / g;
  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * std::conj(e);
  const Complex jqq = c * std::conj(e);

  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex aip = a(i, p);
    const Complex aiq = a(i, q);
    a(i, p) = aip * jpp + aiq * jqp;
    a(i, q) = aip * jpq + aiq * jqq;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Complex apj = a(p, j);
    const Complex aqj = a(q, j);
    a(p, j) = std::conj(jpp) * apj + std::conj(jqp) * aqj;
    a(q, j) = std::conj(jpq) * apj + std::conj(jqq) * aqj;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t i = 0; i < n; ++i) {
    const Complex vip = v(i, p);
    const Complex viq = v(i, q);
    v(i, p) = vip * jpp + viq * jqp;
    v(i, q) = vip * jpq + viq * jqq;
  }
}

}  // namespace

EigenDecomposition hermitian_eigen(const DenseMatrix& m, const JacobiOptions& options) {
  if (!m.square()) throw Error(ErrorKind::DimMismatch, "eigensolver needs a square matrix");
  const double defect = m.hermiticity_defect();
  if (defect > options.hermitian_tol)
    throw Error(ErrorKind::NotHermitian, "eigensolver input defect " + std::to_string(defect), defect);

  const std::size_t n = m.rows();
  DenseMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  DenseMatrix v = DenseMatrix::identity(n);

  const double scale = a.frobenius_norm();
  bool converged = false;
  for (int sweep = 0; sweep <= options.max_sweeps; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off <= options.relative_off_tol * scale || off == 0.0) {
      converged = true;
      break;
    }
    if (sweep == options.max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }
  if (!converged) {
    throw Error(ErrorKind::NoConvergence,
                "Jacobi sweeps exhausted at n=" + std::to_string(n), off_diagonal_norm(a));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out{std::vector<double>(n), DenseMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const DenseMatrix& m, const JacobiOptions& options) {
  return hermitian_eigen(m, options).values;
}

}  // namespace sc
