#pragma once

// Dense complex matrices, row-major, double precision.  Sizes in this library
// are tiny (mode dimensions and their products), so the implementation favours
// clarity and determinism over blocking and vectorization.

#include <complex>
#include <cstddef>
#include <vector>

#include "lucanon/errors.hpp"

namespace lucanon {

using Cx = std::complex<double>;

// ── ComplexMatrix ────────────────────────────────────────────────────────────

class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}

  // Zero-initialized rows x cols matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Cx(0.0, 0.0)) {}

  // Takes ownership of a row-major entry vector; throws ShapeMismatch if the
  // entry count does not equal rows*cols.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Cx> entries);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Cx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Cx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<Cx>& data() const { return data_; }
  std::vector<Cx>& data() { return data_; }

  ComplexMatrix adjoint() const;    // conjugate transpose
  ComplexMatrix transpose() const;  // plain transpose, no conjugation

  double frobenius_norm() const;

  // Copies the nr x nc block whose top-left corner is (r0, c0).
  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                      std::size_t nc) const;

  // Writes b into this matrix with top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b);

 private:
  std::size_t rows_, cols_;
  std::vector<Cx> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

// max_ij |(A†A - I)_ij| — distance from unitarity in the max-entry norm.
double unitarity_deviation(const ComplexMatrix& m);

// ── UnitaryMatrix ────────────────────────────────────────────────────────────

// A square matrix validated to satisfy U†U = I within tol (max-entry norm).
// Use trusted() to skip the check when unitarity holds by construction
// (e.g. products of validated unitaries inside hot loops).
class UnitaryMatrix {
 public:
  static constexpr double kDefaultTol = 1e-10;

  // Throws PreconditionViolated if m is not square or not unitary within tol.
  explicit UnitaryMatrix(ComplexMatrix m, double tol = kDefaultTol);

  // No validation; caller guarantees unitarity.
  static UnitaryMatrix trusted(ComplexMatrix m);

  std::size_t dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  const Cx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  UnitaryMatrix adjoint() const { return trusted(m_.adjoint()); }

  static UnitaryMatrix identity(std::size_t dim) {
    return trusted(ComplexMatrix::identity(dim));
  }

 private:
  struct trusted_tag {};
  UnitaryMatrix(ComplexMatrix m, trusted_tag) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

}  // namespace lucanon
