#pragma once

// Degeneracy analysis of mode spectra.  Equal singular values leave a residual
// symmetry after canonicalization: one independent unitary per block of equal
// values (a diagonal phase when every block has size 1).  The partition
// computed here drives which equivalence solver applies and how block-diagonal
// search unitaries are shaped.

#include <cstddef>
#include <vector>

#include "lucanon/errors.hpp"

namespace lucanon {

inline constexpr double kTolDegenDefault = 1e-8;   // relative to sigma_max
inline constexpr double kTolZeroDefault = 1e-10;   // absolute zero cutoff

// ── partition of one mode's spectrum ─────────────────────────────────────────

// Half-open index range [begin, end) of equal-within-tolerance values.
struct DegeneracyBlock {
  std::size_t begin;
  std::size_t end;
  double value;  // mean of the member values
  bool zero;     // true for the trailing block of values <= tol_zero
  std::size_t size() const { return end - begin; }
};

struct ModePartition {
  std::vector<DegeneracyBlock> blocks;
  // True when some adjacent gap lies in (tol, 10*tol]: the grouping was
  // clear-cut by the letter of the tolerance but close enough to the boundary
  // that reports should say so.
  bool near_degenerate = false;
};

// Greedy gap grouping of a descending value sequence: walking left to right,
// a value joins the current block while its gap to the block's most recent
// member is <= tol_degen * max(values[0], 1e-300); chains of pairwise-close
// values therefore merge even when the block's total spread exceeds the
// tolerance (documented coarsening).  Values <= tol_zero form a single zero
// block, always last.  Throws NotSorted if values ascend anywhere (an
// ascent within tol_zero of zero is tolerated as sign noise).
ModePartition degeneracy_partition(const std::vector<double>& values,
                                   double tol_degen = kTolDegenDefault,
                                   double tol_zero = kTolZeroDefault);

// ── whole-state structure ────────────────────────────────────────────────────

struct SymmetryStructure {
  std::vector<ModePartition> modes;

  bool all_blocks_size_one() const {
    for (const auto& m : modes)
      for (const auto& b : m.blocks)
        if (b.size() > 1) return false;
    return true;
  }
  bool any_near_degenerate() const {
    for (const auto& m : modes)
      if (m.near_degenerate) return true;
    return false;
  }
};

// Partition of every mode's spectrum (spectra[n] descending, length I_n).
SymmetryStructure symmetry_structure(
    const std::vector<std::vector<double>>& spectra,
    double tol_degen = kTolDegenDefault, double tol_zero = kTolZeroDefault);

// True iff every mode has the same block sizes in order AND the block values
// agree within tol_spec.  False certifies inequivalence of the underlying
// states (the spectra are invariants), up to the documented tolerance policy;
// note the comparison stacks: a~b and b~c within tol only force a~c within
// 2*tol.  Throws DimensionMismatch if the mode counts or block index ranges
// cover different lengths.
bool structures_compatible(const SymmetryStructure& a,
                           const SymmetryStructure& b, double tol_spec);

}  // namespace lucanon
