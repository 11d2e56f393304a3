#pragma once

// Multipartite pure-state tensors and the index plumbing everything else is
// built on: unfolding, folding, mode products and subtensor slices.
//
// Layout conventions (normative for the whole library):
//   * amplitudes are stored row-major over (i_1, ..., i_N), first index
//     slowest;
//   * unfold(t, n) has rows indexed by i_n and columns indexed row-major by
//     the cyclic list (i_{n+1}, ..., i_N, i_1, ..., i_{n-1}), first entry
//     slowest;
//   * inner(a, b) conjugates its FIRST argument: sum_e b_e * conj(a_e);
//   * mode indices in code are 0-based (documentation and CLI output use
//     1-based labels).

#include <cstddef>
#include <vector>

#include "lucanon/matrix.hpp"

namespace lucanon {

// ── StateTensor ──────────────────────────────────────────────────────────────

// Order-N complex tensor.  Order 0 (dims empty, one amplitude) is allowed as
// the result of slicing an order-1 tensor; new_state() requires N >= 1.
class StateTensor {
 public:
  // Throws DimensionMismatch if amps.size() != product(dims); throws
  // ShapeMismatch if any dimension is zero.
  StateTensor(std::vector<std::size_t> dims, std::vector<Cx> amps);

  std::size_t order() const { return dims_.size(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t size() const { return amps_.size(); }

  const std::vector<Cx>& amplitudes() const { return amps_; }
  const Cx& operator[](std::size_t flat) const { return amps_[flat]; }
  Cx& operator[](std::size_t flat) { return amps_[flat]; }

 private:
  std::vector<std::size_t> dims_;
  std::vector<Cx> amps_;
};

// ── construction and scalar ops ──────────────────────────────────────────────

// Validated constructor for physical states: N >= 1, every dimension >= 1,
// amplitude count == product(dims) (DimensionMismatch otherwise), and not all
// amplitudes below 1e-15 in modulus (ZeroState otherwise).  Input need not be
// normalized.
StateTensor new_state(std::vector<std::size_t> dims, std::vector<Cx> amps);

double norm(const StateTensor& t);

// t / ||t||; throws ZeroState when every amplitude is below 1e-15 in modulus.
StateTensor normalize(const StateTensor& t);

// sum_e b_e * conj(a_e); throws DimensionMismatch unless dims match exactly.
Cx inner(const StateTensor& a, const StateTensor& b);

// ── unfolding / folding ──────────────────────────────────────────────────────

// Mode-n unfolding, I_n x (product of the other dimensions); see the layout
// note at the top of this header.  Throws ModeOutOfRange.
ComplexMatrix unfold(const StateTensor& t, std::size_t mode);

// Exact inverse of unfold under the same layout: fold(unfold(t, n), n,
// t.dims()) reproduces t bit-for-bit.  Throws ShapeMismatch if m disagrees
// with dims, ModeOutOfRange for a bad mode.
StateTensor fold(const ComplexMatrix& m, std::size_t mode,
                 const std::vector<std::size_t>& dims);

// ── mode products and slices ─────────────────────────────────────────────────

// Applies u on mode n: result_{..i'..} = sum_i t_{..i..} * u(i', i).
// Equivalent to fold(u * unfold(t, n), n, dims).  Throws DimensionMismatch if
// u.dim() != dims[n].
StateTensor mode_apply(const StateTensor& t, std::size_t mode,
                       const UnitaryMatrix& u);

// Applies one unitary per mode (order-independent since the factors act on
// distinct modes).  Throws WrongCount unless us.size() == order.
StateTensor multi_apply(const StateTensor& t,
                        const std::vector<UnitaryMatrix>& us);

// The order-(N-1) slice with i_mode fixed to index.  Its dimensions follow the
// cyclic list (I_{mode+1}, ..., I_{mode-1}) so that its flat data equals row
// `index` of unfold(t, mode) bit-for-bit.  Throws IndexOutOfRange.
StateTensor subtensor(const StateTensor& t, std::size_t mode,
                      std::size_t index);

}  // namespace lucanon
