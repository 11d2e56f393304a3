#pragma once

// JSON file formats and loaders.
//
// StateFile:   { "dims": [2,2,2],
//                "amplitudes": [[re, im], ...],   // row-major
//                "label": "ghz" }                 // optional
// WitnessFile: { "unitaries": [ [[re, im], ...], ... ],  // row-major, square
//                "residual": 1.0e-12,
//                "tolerances": { "tol_equiv": ..., "tol_spec": ...,
//                                "tol_degen": ... },
//                "version": "0.1.0" }
//
// Numbers are serialized with shortest-roundtrip rendering, so a
// save-then-load trip reproduces every double bit-for-bit.  All numbers must
// be finite.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "lucanon/equivalence.hpp"
#include "lucanon/tensor.hpp"

namespace lucanon {

inline constexpr const char* kVersion = "0.1.0";

// ── states ───────────────────────────────────────────────────────────────────

// Parses a StateFile.  Malformed JSON, missing/mistyped fields, nonfinite
// numbers or an amplitude count that contradicts dims raise ParseError with
// field context.  If the stored norm deviates from 1 by more than 1e-6 the
// state is normalized and a warning is written to diag (default: std::cerr);
// smaller deviations are preserved untouched so files roundtrip exactly.
// label_out, when non-null, receives the optional label ("" if absent).
StateTensor load_state(const std::filesystem::path& path,
                       std::string* label_out = nullptr,
                       std::ostream* diag = nullptr);

// Writes a StateFile (label omitted when empty).  Throws ParseError on
// nonfinite amplitudes, Error on filesystem failure.
void save_state(const StateTensor& t, const std::filesystem::path& path,
                const std::string& label = "");

// ── witnesses ────────────────────────────────────────────────────────────────

// tolerances recorded alongside a witness (subset of DecisionOptions that
// affected the verdict).
struct WitnessTolerances {
  double tol_equiv = 0.0;
  double tol_spec = 0.0;
  double tol_degen = 0.0;
};

void save_witness(const Witness& w, const std::filesystem::path& path,
                  const WitnessTolerances& tols);

// Parses a WitnessFile; each unitary must be a square matrix within the
// UnitaryMatrix tolerance.  tols_out, when non-null, receives the recorded
// tolerances.
Witness load_witness(const std::filesystem::path& path,
                     WitnessTolerances* tols_out = nullptr);

}  // namespace lucanon
