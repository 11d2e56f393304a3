#include "lucanon/tensor.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace lucanon {

namespace {

constexpr double kZeroAmplitude = 1e-15;

std::size_t dims_product(const std::vector<std::size_t>& dims) {
  std::size_t p = 1;
  for (std::size_t d : dims) p *= d;
  return p;
}

void check_mode(const StateTensor& t, std::size_t mode) {
  if (mode >= t.order())
    throw ModeOutOfRange("mode " + std::to_string(mode) +
                         " out of range for order " +
                         std::to_string(t.order()));
}

// Modes in the normative cyclic column order for unfolding along `mode`:
// mode+1, ..., N-1, 0, ..., mode-1 (first entry varies slowest).
std::vector<std::size_t> cyclic_modes(std::size_t order, std::size_t mode) {
  std::vector<std::size_t> ms;
  ms.reserve(order - 1);
  for (std::size_t k = 1; k < order; ++k) ms.push_back((mode + k) % order);
  return ms;
}

}  // namespace

// ── StateTensor ──────────────────────────────────────────────────────────────

StateTensor::StateTensor(std::vector<std::size_t> dims, std::vector<Cx> amps)
    : dims_(std::move(dims)), amps_(std::move(amps)) {
  for (std::size_t d : dims_)
    if (d == 0) throw ShapeMismatch("tensor dimensions must be >= 1");
  const std::size_t want = dims_product(dims_);
  if (amps_.size() != want)
    throw DimensionMismatch("amplitude count " + std::to_string(amps_.size()) +
                            " does not match dimension product " +
                            std::to_string(want));
}

StateTensor new_state(std::vector<std::size_t> dims, std::vector<Cx> amps) {
  if (dims.empty())
    throw ShapeMismatch("a state needs at least one mode");
  StateTensor t(std::move(dims), std::move(amps));
  bool all_zero = true;
  for (const Cx& a : t.amplitudes())
    if (std::abs(a) >= kZeroAmplitude) {
      all_zero = false;
      break;
    }
  if (all_zero) throw ZeroState("every amplitude is below 1e-15 in modulus");
  return t;
}

// ── scalar ops ───────────────────────────────────────────────────────────────

double norm(const StateTensor& t) {
  double s = 0.0;
  for (const Cx& a : t.amplitudes()) s += std::norm(a);
  return std::sqrt(s);
}

StateTensor normalize(const StateTensor& t) {
  bool all_zero = true;
  for (const Cx& a : t.amplitudes())
    if (std::abs(a) >= kZeroAmplitude) {
      all_zero = false;
      break;
    }
  if (all_zero)
    throw ZeroState("cannot normalize: every amplitude is below 1e-15");
  const double inv = 1.0 / norm(t);
  std::vector<Cx> scaled = t.amplitudes();
  for (Cx& a : scaled) a *= inv;
  return StateTensor(t.dims(), std::move(scaled));
}

Cx inner(const StateTensor& a, const StateTensor& b) {
  if (a.dims() != b.dims())
    throw DimensionMismatch("inner product requires identical dims");
  Cx s(0.0, 0.0);
  for (std::size_t e = 0; e < a.size(); ++e)
    s += b[e] * std::conj(a[e]);  // conjugation on the first argument
  return s;
}

// ── unfolding / folding ──────────────────────────────────────────────────────

ComplexMatrix unfold(const StateTensor& t, std::size_t mode) {
  check_mode(t, mode);
  const auto& dims = t.dims();
  const std::size_t order = t.order();
  const std::size_t rows = dims[mode];
  const std::size_t cols = t.size() / rows;
  const std::vector<std::size_t> cyc = cyclic_modes(order, mode);

  ComplexMatrix m(rows, cols);
  std::vector<std::size_t> idx(order, 0);
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    // decompose flat (row-major, first index slowest) into idx
    std::size_t rem = flat;
    for (std::size_t n = order; n-- > 0;) {
      idx[n] = rem % dims[n];
      rem /= dims[n];
    }
    std::size_t col = 0;
    for (std::size_t cm : cyc) col = col * dims[cm] + idx[cm];
    m(idx[mode], col) = t[flat];
  }
  return m;
}

StateTensor fold(const ComplexMatrix& m, std::size_t mode,
                 const std::vector<std::size_t>& dims) {
  const std::size_t order = dims.size();
  if (mode >= order)
    throw ModeOutOfRange("mode " + std::to_string(mode) +
                         " out of range for order " + std::to_string(order));
  const std::size_t total = dims_product(dims);
  if (total == 0) throw ShapeMismatch("tensor dimensions must be >= 1");
  const std::size_t rows = dims[mode];
  const std::size_t cols = total / rows;
  if (m.rows() != rows || m.cols() != cols)
    throw ShapeMismatch("fold: matrix is " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + ", expected " +
                        std::to_string(rows) + "x" + std::to_string(cols));
  const std::vector<std::size_t> cyc = cyclic_modes(order, mode);

  std::vector<Cx> amps(total);
  std::vector<std::size_t> idx(order, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    idx[mode] = r;
    for (std::size_t c = 0; c < cols; ++c) {
      std::size_t rem = c;
      for (std::size_t k = cyc.size(); k-- > 0;) {
        idx[cyc[k]] = rem % dims[cyc[k]];
        rem /= dims[cyc[k]];
      }
      std::size_t flat = 0;
      for (std::size_t n = 0; n < order; ++n) flat = flat * dims[n] + idx[n];
      amps[flat] = m(r, c);
    }
  }
  return StateTensor(dims, std::move(amps));
}

// ── mode products and slices ─────────────────────────────────────────────────

StateTensor mode_apply(const StateTensor& t, std::size_t mode,
                       const UnitaryMatrix& u) {
  check_mode(t, mode);
  if (u.dim() != t.dims()[mode])
    throw DimensionMismatch("mode_apply: unitary is " +
                            std::to_string(u.dim()) + "-dimensional, mode " +
                            std::to_string(mode) + " has dimension " +
                            std::to_string(t.dims()[mode]));
  return fold(u.matrix() * unfold(t, mode), mode, t.dims());
}

StateTensor multi_apply(const StateTensor& t,
                        const std::vector<UnitaryMatrix>& us) {
  if (us.size() != t.order())
    throw WrongCount("multi_apply: got " + std::to_string(us.size()) +
                     " unitaries for order " + std::to_string(t.order()));
  StateTensor r = t;
  for (std::size_t n = 0; n < us.size(); ++n) r = mode_apply(r, n, us[n]);
  return r;
}

StateTensor subtensor(const StateTensor& t, std::size_t mode,
                      std::size_t index) {
  check_mode(t, mode);
  const auto& dims = t.dims();
  if (index >= dims[mode])
    throw IndexOutOfRange("subtensor: index " + std::to_string(index) +
                          " out of range for dimension " +
                          std::to_string(dims[mode]));
  // Dims follow the cyclic order so the flat data IS row `index` of the
  // unfolding, bit for bit.
  const std::vector<std::size_t> cyc = cyclic_modes(t.order(), mode);
  std::vector<std::size_t> sub_dims;
  sub_dims.reserve(cyc.size());
  for (std::size_t cm : cyc) sub_dims.push_back(dims[cm]);

  const ComplexMatrix m = unfold(t, mode);
  std::vector<Cx> amps(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) amps[c] = m(index, c);
  return StateTensor(std::move(sub_dims), std::move(amps));
}

}  // namespace lucanon
