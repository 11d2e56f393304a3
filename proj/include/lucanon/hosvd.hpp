#pragma once

// Higher-order SVD: the canonical form under local unitaries.  For each mode
// the factor is the full left-singular-vector matrix of the mode-n unfolding;
// the core is the input with every factor's adjoint applied.  The core's
// mode-n subtensors are mutually orthogonal with norms equal to the mode-n
// singular values (descending) — that property is what makes the core a
// canonical representative.

#include <cstddef>
#include <vector>

#include "lucanon/svd.hpp"
#include "lucanon/tensor.hpp"

namespace lucanon {

// ── decomposition ────────────────────────────────────────────────────────────

struct HOSVDResult {
  StateTensor core;                         // same dims as the input
  std::vector<UnitaryMatrix> factors;       // factors[n] is I_n x I_n
  std::vector<std::vector<double>> spectra; // spectra[n]: descending, padded
                                            // with zeros to length I_n
};

// Requires a normalized input (callers that accept raw data normalize first).
// No gauge fixing is applied to the factors: any deterministic choice of
// singular vectors is acceptable, and downstream equivalence logic works
// modulo the residual symmetry group anyway.
HOSVDResult hosvd(const StateTensor& t);

// ── verification ─────────────────────────────────────────────────────────────

// Residuals for every invariant the decomposition promises.  Never throws on
// bad data; `pass` is the conjunction of all residuals <= tol.
struct CoreReport {
  double reconstruction_error;  // ||multi_apply(core, factors) - original||
  double max_cross_inner;       // max_{n, i<j} |<core_{i_n=i}, core_{i_n=j}>|
  double spectrum_mismatch;     // max_{n,i} | ||core_{i_n=i}|| - spectra[n][i] |
  double ordering_violation;    // max ascending step in actual subtensor norms
  double tol;
  bool pass;
};

CoreReport verify_core(const HOSVDResult& r, const StateTensor& original,
                       double tol);

// ── single-mode views ────────────────────────────────────────────────────────

// rho^(n) = unfold(t, n) * unfold(t, n)†, the mode-n reduced density matrix
// (Hermitian, PSD, trace ||t||^2).
ComplexMatrix reduced_density(const StateTensor& t, std::size_t mode);

// Eigenvalues of reduced_density(t, mode), descending.  Computed by the
// Hermitian Jacobi eigensolver, NOT by squaring svd() output, so it serves as
// an independent route to the mode spectrum (lambda_j = sigma_j^2).
std::vector<double> sorted_trace_spectrum(const StateTensor& t,
                                          std::size_t mode);

}  // namespace lucanon
