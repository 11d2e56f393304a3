#pragma once

// Independent oracles used by the tests.  Everything here is written against
// first principles (closed forms, direct sums, exhaustive alternation) and
// deliberately avoids the library's SVD / elimination code paths, so a bug in
// the production routes cannot hide behind an identical bug here.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <vector>

#include "lucanon/random.hpp"
#include "lucanon/tensor.hpp"

namespace oracles {

using lucanon::Cx;
using lucanon::ComplexMatrix;
using lucanon::StateTensor;

// ── Gram-eigenvalue spectrum ─────────────────────────────────────────────────

// Mode-n singular values of a 2 x cols unfolding, from the closed-form
// eigenvalues of its 2x2 Gram matrix G = M M†:
//   lambda = (a + c)/2 ± sqrt(((a - c)/2)^2 + |b|^2),  sigma = sqrt(lambda).
inline std::vector<double> gram2_spectrum(const ComplexMatrix& m) {
  double a = 0.0, c = 0.0;
  Cx b(0.0, 0.0);
  for (std::size_t k = 0; k < m.cols(); ++k) {
    a += std::norm(m(0, k));
    c += std::norm(m(1, k));
    b += m(0, k) * std::conj(m(1, k));
  }
  const double mid = 0.5 * (a + c);
  const double rad = std::sqrt(0.25 * (a - c) * (a - c) + std::norm(b));
  const double hi = std::max(mid + rad, 0.0);
  const double lo = std::max(mid - rad, 0.0);
  return {std::sqrt(hi), std::sqrt(lo)};
}

// ── Kronecker product ────────────────────────────────────────────────────────

// kron(A, B)((i*Br + k), (j*Bc + l)) = A(i, j) * B(k, l): the first factor is
// the slow index, matching the library's row-major unfolding layout.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// ── alternating phase-fit ────────────────────────────────────────────────────

// Least-squares floor of || phases o A - B || over per-mode diagonal phases,
// by exact coordinate updates (each theta[n][i] maximizes the real part of
// the overlap with every other phase held fixed) from several seeded random
// starts.  Feasible phase systems are driven to ~1e-15; infeasible ones sit
// on a strictly positive floor.  Used to cross-check the exact solver's
// certificates by a completely different method.
inline double phase_fit_residual(const StateTensor& a, const StateTensor& b,
                                 int starts = 8, int passes = 200,
                                 std::uint64_t seed = 12345) {
  const auto& dims = a.dims();
  const std::size_t order = a.order();
  double best = std::numeric_limits<double>::infinity();

  for (int s = 0; s < starts; ++s) {
    lucanon::Xoshiro256pp rng(lucanon::derive_seed(seed, s));
    std::vector<std::vector<double>> theta(order);
    for (std::size_t n = 0; n < order; ++n) {
      theta[n].assign(dims[n], 0.0);
      if (s > 0)
        for (double& t : theta[n])
          t = 2.0 * 3.14159265358979323846 * rng.uniform01();
    }

    std::vector<std::size_t> idx(order, 0);
    const auto entry_phase = [&](std::size_t e) {
      std::size_t rem = e;
      double p = 0.0;
      for (std::size_t n = order; n-- > 0;) {
        p += theta[n][rem % dims[n]];
        rem /= dims[n];
      }
      return p;
    };

    for (int pass = 0; pass < passes; ++pass) {
      double change = 0.0;
      for (std::size_t n = 0; n < order; ++n) {
        for (std::size_t i = 0; i < dims[n]; ++i) {
          // z = sum over entries with i_n = i of conj(phased A w/o theta[n][i]) * B
          Cx z(0.0, 0.0);
          for (std::size_t e = 0; e < a.size(); ++e) {
            std::size_t rem = e;
            for (std::size_t m = order; m-- > n + 1;) rem /= dims[m];
            if (rem % dims[n] != i) continue;
            const double rest = entry_phase(e) - theta[n][i];
            z += std::conj(a[e] * std::polar(1.0, rest)) * b[e];
          }
          if (std::abs(z) > 0.0) {
            const double next = std::arg(z);
            change = std::max(change, std::abs(next - theta[n][i]));
            theta[n][i] = next;
          }
        }
      }
      if (change < 1e-14) break;
    }

    double r2 = 0.0;
    for (std::size_t e = 0; e < a.size(); ++e)
      r2 += std::norm(a[e] * std::polar(1.0, entry_phase(e)) - b[e]);
    best = std::min(best, std::sqrt(r2));
  }
  return best;
}

}  // namespace oracles
