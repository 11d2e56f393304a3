#include "lucanon/random.hpp"

#include <cmath>

namespace lucanon {

namespace {

// splitmix64 step (Steele/Lea/Flood): used for seeding and stream derivation.
std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) {
  // Expand the seed through splitmix64, per the generator author's
  // recommendation; the state is nonzero with overwhelming probability and
  // never all-zero because splitmix64 is a bijection sequence.
  std::uint64_t x = seed;
  for (auto& word : s_) word = splitmix64(x);
}

std::uint64_t Xoshiro256pp::next() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256pp::uniform01() {
  // Top 53 bits -> [0, 1) on the binary64 grid.
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Cx Xoshiro256pp::gaussian() {
  // Box-Muller; u1 is shifted into (0, 1] so the log is always finite.
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  return Cx(r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2));
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  // Two dependent splitmix64 steps keyed by (master, stream); distinct
  // streams give decorrelated sub-generators deterministically.
  std::uint64_t x = master ^ (0x9e3779b97f4a7c15ull * (stream + 1));
  std::uint64_t z = splitmix64(x);
  x ^= z;
  return splitmix64(x);
}

StateTensor random_state(const std::vector<std::size_t>& dims,
                         std::uint64_t seed) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  Xoshiro256pp rng(seed);
  std::vector<Cx> amps(total);
  for (Cx& a : amps) a = rng.gaussian();
  return normalize(new_state(dims, std::move(amps)));
}

UnitaryMatrix haar_random_unitary(std::size_t dim, std::uint64_t seed) {
  Xoshiro256pp rng(seed);
  return haar_random_unitary(rng, dim);
}

UnitaryMatrix haar_random_unitary(Xoshiro256pp& rng, std::size_t dim) {
  if (dim == 0) throw ShapeMismatch("unitary dimension must be >= 1");
  ComplexMatrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.gaussian();

  // Modified Gram-Schmidt QR on the columns.  Each pivot norm (an R diagonal)
  // is real positive, which is the phase convention making Q Haar-uniform.
  ComplexMatrix q(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<Cx> v(dim);
    for (std::size_t k = 0; k < dim; ++k) v[k] = g(k, j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t p = 0; p < j; ++p) {
        Cx ov(0.0, 0.0);
        for (std::size_t k = 0; k < dim; ++k) ov += std::conj(q(k, p)) * v[k];
        for (std::size_t k = 0; k < dim; ++k) v[k] -= ov * q(k, p);
      }
    }
    double nrm = 0.0;
    for (const Cx& x : v) nrm += std::norm(x);
    nrm = std::sqrt(nrm);
    // A Gaussian matrix is singular with probability zero; a zero pivot here
    // would mean a broken generator rather than bad luck.
    if (nrm == 0.0) throw NumericalFailure("degenerate Gaussian draw in QR");
    for (std::size_t k = 0; k < dim; ++k) q(k, j) = v[k] / nrm;
  }
  return UnitaryMatrix(std::move(q));
}

}  // namespace lucanon
