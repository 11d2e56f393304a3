#include "lucanon/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace lucanon {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Cx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw ShapeMismatch("matrix entries: expected " +
                        std::to_string(rows_ * cols_) + " values, got " +
                        std::to_string(data_.size()));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = Cx(1.0, 0.0);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Cx& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0,
                                   std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    throw ShapeMismatch("block exceeds matrix bounds");
  ComplexMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void ComplexMatrix::set_block(std::size_t r0, std::size_t c0,
                              const ComplexMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
    throw ShapeMismatch("block exceeds matrix bounds");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      (*this)(r0 + i, c0 + j) = b(i, j);
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw ShapeMismatch("matrix product: " + std::to_string(a.cols()) +
                        " inner columns vs " + std::to_string(b.rows()) +
                        " inner rows");
  ComplexMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Cx aik = a(i, k);
      if (aik == Cx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeMismatch("matrix difference: shapes differ");
  ComplexMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

double unitarity_deviation(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  const std::size_t n = m.rows();
  double dev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Cx g(0.0, 0.0);  // (m† m)_{ij}
      for (std::size_t k = 0; k < n; ++k) g += std::conj(m(k, i)) * m(k, j);
      if (i == j) g -= Cx(1.0, 0.0);
      dev = std::max(dev, std::abs(g));
    }
  }
  return dev;
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols())
    throw PreconditionViolated("unitary matrix must be square");
  const double dev = unitarity_deviation(m_);
  if (!(dev <= tol))
    throw PreconditionViolated("matrix is not unitary: deviation " +
                               std::to_string(dev) + " exceeds tolerance");
}

UnitaryMatrix UnitaryMatrix::trusted(ComplexMatrix m) {
  return UnitaryMatrix(std::move(m), trusted_tag{});
}

}  // namespace lucanon
