#pragma once

// Deterministic randomness.  Generator: xoshiro256++ 1.0 seeded through
// splitmix64 — both algorithms are pinned here rather than delegated to
// std::mt19937/std::normal_distribution, whose outputs are not specified
// bit-for-bit across standard libraries.  Equal seeds give equal streams on
// every platform, which the reproducibility guarantees (and golden tests)
// rely on.

#include <cstdint>
#include <vector>

#include "lucanon/matrix.hpp"
#include "lucanon/tensor.hpp"

namespace lucanon {

// ── generator ────────────────────────────────────────────────────────────────

class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed);

  std::uint64_t next();

  // Uniform double in [0, 1), 53-bit resolution.
  double uniform01();

  // Standard complex Gaussian (independent N(0, 1/2)-free convention: real
  // and imaginary parts are each N(0,1)); Box-Muller on uniform01().
  Cx gaussian();

 private:
  std::uint64_t s_[4];
};

// Deterministic sub-stream seed for (master, stream) pairs, used to give each
// restart / mode / draw its own decorrelated generator.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

// ── random objects ───────────────────────────────────────────────────────────

// Normalized state with i.i.d. complex Gaussian amplitudes.  Equal
// (dims, seed) pairs produce bit-identical tensors.
StateTensor random_state(const std::vector<std::size_t>& dims,
                         std::uint64_t seed);

// Haar-distributed unitary: complex Gaussian matrix followed by modified
// Gram-Schmidt QR.  MGS makes each diagonal of R real positive, which is
// exactly the phase convention under which Q is Haar.  dim >= 1.
UnitaryMatrix haar_random_unitary(std::size_t dim, std::uint64_t seed);

// Same draw from an existing generator, for callers assembling several
// unitaries out of one stream (block-diagonal restarts and the like).
UnitaryMatrix haar_random_unitary(Xoshiro256pp& rng, std::size_t dim);

}  // namespace lucanon
