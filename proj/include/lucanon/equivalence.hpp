#pragma once

// Local-unitary equivalence decisions.  Both states are canonicalized; their
// spectra either certify inequivalence, or the residual symmetry group (per
// the degeneracy structure) is searched for a transformation mapping one core
// to the other.  Every Equivalent verdict carries an explicit witness that is
// re-verified end-to-end before being returned; Inequivalent verdicts carry
// re-checkable diagnostics; everything else is an honest Undecided.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lucanon/hosvd.hpp"
#include "lucanon/symmetry.hpp"
#include "lucanon/tensor.hpp"

namespace lucanon {

// ── options ──────────────────────────────────────────────────────────────────

struct DecisionOptions {
  double tol_equiv = 1e-8;   // witness residual acceptance
  double tol_spec = 1e-9;    // spectra comparison
  double tol_degen = 1e-8;   // degeneracy grouping, relative to sigma_max
  double tol_zero = 1e-10;   // zero singular-value cutoff
  int restarts = 32;         // total search starts; the first is the identity
  int max_iters = 500;       // alternating iterations per restart
  double conv_tol = 1e-12;   // relative residual-change stopping threshold
  std::uint64_t seed = 1;    // master seed for restart randomization
};

// ── phase solver (nondegenerate symmetry group) ──────────────────────────────

// Result of the exact diagonal-phase solve.  `phases` present means coreB ==
// phases o coreA was solved; absent means the system is infeasible, which for
// size-1 blocks is a *certificate* (the residual symmetry group is exactly
// the diagonal phases).  Deviations let callers report how the tolerance was
// exceeded: modulus_deviation is max_e ||A_e|-|B_e||, closure_deviation the
// worst amplification-scaled violation of a dependent (integer-combination)
// equation mod 2*pi.
struct PhaseSolveReport {
  std::optional<std::vector<std::vector<double>>> phases;  // [mode][index]
  double modulus_deviation = 0.0;
  double closure_deviation = 0.0;
};

// Finds per-mode phase vectors theta with B_e = exp(i * sum_n theta[n][i_n(e)])
// * A_e over the common support (moduli > tol_zero), or certifies that none
// exist.  Procedure: entrywise modulus check; phase equations over the
// support; gauge fix theta[n][0] = 0 for n >= 1; integer-preserving
// elimination (the only row operations are swap / negate / subtract an
// integer multiple), so every dependent row is a genuine integer combination
// of original equations and must close to 0 mod 2*pi within tol scaled by the
// row's amplification factor.  Free unknowns are set to 0.
//
// `structure`, when supplied, is validated: any block of size > 1 throws
// PreconditionViolated (the caller should be using solve_block_symmetry).
PhaseSolveReport solve_phase_symmetry(const StateTensor& coreA,
                                      const StateTensor& coreB, double tol,
                                      double tol_zero = kTolZeroDefault,
                                      const SymmetryStructure* structure =
                                          nullptr);

// ── block solver (degenerate symmetry group) ─────────────────────────────────

// Result of the heuristic block-unitary search.  Absence is NOT a certificate
// of inequivalence — it only means no transformation was found within the
// restart/iteration budget; best_residual reports how close the search got.
struct BlockSolveReport {
  std::optional<std::vector<UnitaryMatrix>> qs;  // block-diagonal, per mode
  double best_residual = 0.0;
  int winning_restart = -1;  // restart index that met the tolerance, or -1
  int restarts_tried = 0;
};

// Searches for block-diagonal unitaries Q^(n) (blocks per s's partitions)
// with ||coreB - multi_apply(coreA, Q)|| <= opts.tol_equiv, by alternating
// per-mode polar-factor updates (restart 0 starts from identities, restart
// r > 0 from Haar block-diagonal draws seeded by (opts.seed, r); restarts run
// in index order and the first success wins, so results are deterministic).
// Preconditions: equal dims, both inputs canonical cores, structures
// compatible; s's index ranges must cover each mode's dimension exactly
// (PreconditionViolated otherwise).
BlockSolveReport solve_block_symmetry(const StateTensor& coreA,
                                      const StateTensor& coreB,
                                      const SymmetryStructure& s,
                                      const DecisionOptions& opts);

// ── verdicts ─────────────────────────────────────────────────────────────────

// Local unitaries w with multi_apply(a, w) == b within `residual`.
struct Witness {
  std::vector<UnitaryMatrix> unitaries;
  double residual = 0.0;
};

enum class VerdictTag {
  Equivalent,           // witness attached, re-verified end to end
  InequivalentSpectra,  // certified: spectra differ beyond tol_spec
  InequivalentPhase,    // certified: nondegenerate phase system infeasible
  Undecided,            // search exhausted without a certificate either way
};

const char* to_string(VerdictTag tag);

// Diagnostic for InequivalentSpectra: the offending entry, re-checkable from
// the two states' spectra.  mode and index are 0-based.
struct SpectraMismatch {
  std::size_t mode = 0;
  std::size_t index = 0;
  double delta = 0.0;
};

struct Verdict {
  VerdictTag tag = VerdictTag::Undecided;
  std::optional<Witness> witness;                 // Equivalent only
  std::optional<SpectraMismatch> spectra_mismatch;  // InequivalentSpectra only
  double phase_modulus_deviation = 0.0;  // InequivalentPhase diagnostics
  double phase_closure_deviation = 0.0;
  double best_residual = 0.0;  // block-search best over restarts
  int restarts_used = 0;
  bool inputs_normalized = false;   // true if either input was renormalized
  bool near_degenerate = false;     // some spectral gap within 10x tol_degen
  std::string note;                 // human-readable detail, diagnostics only
};

// ── decision pipeline ────────────────────────────────────────────────────────

// Decides local-unitary equivalence of a and b (equal dims required,
// DimensionMismatch otherwise; inputs are renormalized when needed and the
// verdict notes it).  Pipeline: canonicalize both; certified spectra check;
// exact phase solve when every degeneracy block has size 1; block-unitary
// search otherwise.  Any Equivalent verdict's witness satisfies
// ||multi_apply(a, w) - b|| <= opts.tol_equiv, re-verified here
// (NumericalFailure if a found witness fails re-verification, which would
// indicate an internal bug).
Verdict decide_lu(const StateTensor& a, const StateTensor& b,
                  const DecisionOptions& opts = {});

// ── witness verification ─────────────────────────────────────────────────────

struct WitnessReport {
  double transform_residual = 0.0;   // ||multi_apply(a, w) - b||
  double unitarity_deviation = 0.0;  // max over modes
  bool pass = false;                 // both <= tol
};

// Never throws on bad data (shape mismatches yield pass = false with infinite
// residuals); tol = 0 fails on any floating-point data, by design.
WitnessReport verify_witness(const StateTensor& a, const StateTensor& b,
                             const Witness& w, double tol);

// ── brute-force oracle ───────────────────────────────────────────────────────

// Best local-unitary distance min over U of ||multi_apply(a, U) - b|| found
// by unconstrained alternating polar iteration over opts.restarts starts
// (the first from identities, the rest from seeded Haar draws).  A search
// result, not a certificate: use
// as a cross-check in tests and fixtures.  Guard: total dimension product
// must be <= 64 (SizeGuard), this is deliberately not a production path.
struct BruteForceResult {
  double distance = 0.0;
  Witness witness;
};

BruteForceResult brute_force_lu_distance(const StateTensor& a,
                                         const StateTensor& b,
                                         const DecisionOptions& opts = {});

}  // namespace lucanon
