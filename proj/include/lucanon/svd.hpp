#pragma once

// Dense complex SVD and Hermitian eigenvalues, both by Jacobi iteration.
// Deterministic: fixed sweep order, no randomness, so equal inputs produce
// bit-identical results.

#include <vector>

#include "lucanon/matrix.hpp"

namespace lucanon {

// ── singular value decomposition ─────────────────────────────────────────────

// Full decomposition m = u * diag(sigma) * vh with u (rows x rows) and vh
// (cols x cols) both unitary and sigma descending of length min(rows, cols).
struct SVDResult {
  ComplexMatrix u;
  std::vector<double> sigma;
  ComplexMatrix vh;
};

// One-sided Jacobi with the usual orientation trick (work on A or A† so the
// working matrix is tall), followed by deterministic completion of the left
// factor's kernel columns.  Convergence is declared when every column pair
// satisfies |<b_i, b_j>| <= 1e-13 * ||b_i|| ||b_j||; at most 60 sweeps are
// attempted and NumericalFailure is thrown on overrun (never observed for
// matrices in this library's size range).
SVDResult svd(const ComplexMatrix& m);

// ── Hermitian eigenvalues ────────────────────────────────────────────────────

// Eigenvalues of a Hermitian matrix, descending, by cyclic two-sided Jacobi.
// Independent of svd() above — the two are used as cross-checking routes.
// Throws ShapeMismatch if m is not square (Hermitianity is the caller's
// contract; only the lower triangle drives the rotations) and
// NumericalFailure on sweep overrun (bound: 60 sweeps).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// ── polar factor ─────────────────────────────────────────────────────────────

// Unitary polar factor u*vh of a square matrix (the unitary nearest to m, and
// the maximizer of Re tr(Q† m) over unitaries Q).  Well-defined for singular
// m through the SVD's completed kernel directions.
ComplexMatrix polar_unitary(const ComplexMatrix& m);

}  // namespace lucanon
