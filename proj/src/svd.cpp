#include "lucanon/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace lucanon {

namespace {

// Convergence thresholds and sweep bounds for both Jacobi kernels.  The
// library's matrices are tiny (mode dimensions and their products), for which
// Jacobi converges in a handful of sweeps; 60 is a generous documented bound
// whose overrun signals broken input rather than a hard problem.
constexpr double kSvdTol = 1e-13;  // relative column-pair coherence
constexpr double kEigTol = 1e-14;  // off-diagonal threshold, times max entry
constexpr int kMaxSweeps = 60;

// One plane rotation of the one-sided Jacobi: given column moduli a = ||b_i||^2,
// b = ||b_j||^2 and coherence c = <b_i, b_j> (conjugation on the first), fills
// cs (real) and sn (complex) so that the update
//     b_i' = cs*b_i - sn*b_j,   b_j' = conj(sn)*b_i + cs*b_j
// makes the new columns orthogonal.
void make_rotation(double a, double b, Cx c, double& cs, Cx& sn) {
  const double abs_c = std::abs(c);
  const double zeta = (a - b) / (2.0 * abs_c);
  const double w = std::sqrt(zeta * zeta + 1.0);
  const double t = (zeta >= 0.0) ? 1.0 / (zeta + w) : 1.0 / (zeta - w);
  cs = 1.0 / std::sqrt(t * t + 1.0);
  sn = -(t * cs) * (std::conj(c) / abs_c);
}

// Appends orthonormal columns to `cols` (each of length dim) until it holds
// `want` of them, drawing candidates from the canonical basis in order and
// re-orthogonalizing twice.  Deterministic.
void complete_basis(std::vector<std::vector<Cx>>& cols, std::size_t dim,
                    std::size_t want) {
  for (double threshold : {0.5, 1e-8}) {
    for (std::size_t cand = 0; cand < dim && cols.size() < want; ++cand) {
      std::vector<Cx> v(dim, Cx(0.0, 0.0));
      v[cand] = Cx(1.0, 0.0);
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& u : cols) {
          Cx ov(0.0, 0.0);
          for (std::size_t k = 0; k < dim; ++k) ov += std::conj(u[k]) * v[k];
          for (std::size_t k = 0; k < dim; ++k) v[k] -= ov * u[k];
        }
      }
      double nrm = 0.0;
      for (const Cx& x : v) nrm += std::norm(x);
      nrm = std::sqrt(nrm);
      if (nrm > threshold) {
        for (Cx& x : v) x /= nrm;
        cols.push_back(std::move(v));
      }
    }
    if (cols.size() == want) return;
  }
  throw NumericalFailure("basis completion failed");  // unreachable in theory
}

}  // namespace

// ── svd ──────────────────────────────────────────────────────────────────────

SVDResult svd(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0)
    throw ShapeMismatch("svd of an empty matrix");

  // Orient so the working matrix B is tall; for a wide input we decompose the
  // adjoint and swap the roles of the factors at the end.
  const bool transposed = m.rows() < m.cols();
  ComplexMatrix B = transposed ? m.adjoint() : m;
  const std::size_t mb = B.rows();  // mb >= nb
  const std::size_t nb = B.cols();

  ComplexMatrix V = ComplexMatrix::identity(nb);

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    double max_rel = 0.0;
    for (std::size_t i = 0; i + 1 < nb; ++i) {
      for (std::size_t j = i + 1; j < nb; ++j) {
        double a = 0.0, b = 0.0;
        Cx c(0.0, 0.0);
        for (std::size_t k = 0; k < mb; ++k) {
          a += std::norm(B(k, i));
          b += std::norm(B(k, j));
          c += std::conj(B(k, i)) * B(k, j);
        }
        if (a == 0.0 || b == 0.0) continue;
        const double rel = std::abs(c) / (std::sqrt(a) * std::sqrt(b));
        max_rel = std::max(max_rel, rel);
        if (rel <= kSvdTol) continue;

        double cs;
        Cx sn;
        make_rotation(a, b, c, cs, sn);
        for (std::size_t k = 0; k < mb; ++k) {
          const Cx t1 = B(k, i), t2 = B(k, j);
          B(k, i) = cs * t1 - sn * t2;
          B(k, j) = std::conj(sn) * t1 + cs * t2;
        }
        for (std::size_t k = 0; k < nb; ++k) {
          const Cx t1 = V(k, i), t2 = V(k, j);
          V(k, i) = cs * t1 - sn * t2;
          V(k, j) = std::conj(sn) * t1 + cs * t2;
        }
      }
    }
    converged = (max_rel <= kSvdTol);
  }
  if (!converged)
    throw NumericalFailure("svd did not converge within " +
                           std::to_string(kMaxSweeps) + " sweeps");

  // Singular values are the column norms; sort descending (stable, so exact
  // ties keep their sweep order and results stay deterministic).
  std::vector<double> sig(nb);
  for (std::size_t j = 0; j < nb; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < mb; ++k) s += std::norm(B(k, j));
    sig[j] = std::sqrt(s);
  }
  std::vector<std::size_t> order(nb);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return sig[x] > sig[y]; });

  std::vector<double> sigma(nb);
  ComplexMatrix Vp(nb, nb);  // V with columns in sorted order
  for (std::size_t r = 0; r < nb; ++r) {
    sigma[r] = sig[order[r]];
    for (std::size_t k = 0; k < nb; ++k) Vp(k, r) = V(k, order[r]);
  }

  // Left factor: normalized nonzero columns, then deterministic completion of
  // the kernel / co-kernel directions to a full mb x mb unitary.
  std::vector<std::vector<Cx>> ucols;
  ucols.reserve(mb);
  for (std::size_t r = 0; r < nb; ++r) {
    if (sigma[r] <= 0.0) break;  // descending: the rest are zero too
    std::vector<Cx> col(mb);
    for (std::size_t k = 0; k < mb; ++k) col[k] = B(k, order[r]) / sigma[r];
    ucols.push_back(std::move(col));
  }
  complete_basis(ucols, mb, mb);
  ComplexMatrix Ub(mb, mb);
  for (std::size_t j = 0; j < mb; ++j)
    for (std::size_t k = 0; k < mb; ++k) Ub(k, j) = ucols[j][k];

  SVDResult out;
  if (!transposed) {
    out.u = std::move(Ub);
    out.vh = Vp.adjoint();
  } else {
    // m = B† = Vp * diag(sigma)^T * Ub†
    out.u = std::move(Vp);
    out.vh = Ub.adjoint();
  }
  out.sigma = std::move(sigma);
  return out;
}

// ── hermitian_eigenvalues ────────────────────────────────────────────────────

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols())
    throw ShapeMismatch("hermitian_eigenvalues needs a square matrix");
  const std::size_t n = m.rows();
  ComplexMatrix A = m;

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(A(i, j)));
  if (scale == 0.0) return std::vector<double>(n, 0.0);

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    double max_off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        max_off = std::max(max_off, std::abs(A(p, q)));
    if (max_off <= kEigTol * scale) {
      converged = true;
      break;
    }

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Cx h = A(p, q);
        const double absh = std::abs(h);
        if (absh == 0.0) continue;
        const Cx omega = h / absh;
        const double alpha = A(p, p).real();
        const double beta = A(q, q).real();
        const double zeta = (alpha - beta) / (2.0 * absh);
        const double t =
            (zeta >= 0.0 ? 1.0 : -1.0) /
            (std::abs(zeta) + std::sqrt(zeta * zeta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // Similarity A <- J† A J with the rotation J = [[c, -s*omega],
        // [s*conj(omega), c]] in the (p, q) plane: columns first, then rows.
        for (std::size_t k = 0; k < n; ++k) {
          const Cx akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp + s * std::conj(omega) * akq;
          A(k, q) = -s * omega * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Cx apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk + s * omega * aqk;
          A(q, k) = -s * std::conj(omega) * apk + c * aqk;
        }
        A(p, q) = Cx(0.0, 0.0);  // exact by construction
        A(q, p) = Cx(0.0, 0.0);
      }
    }
  }
  if (!converged)
    throw NumericalFailure("eigensolver did not converge within " +
                           std::to_string(kMaxSweeps) + " sweeps");

  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = A(i, i).real();
  std::sort(ev.begin(), ev.end(), std::greater<double>());
  return ev;
}

// ── polar_unitary ────────────────────────────────────────────────────────────

ComplexMatrix polar_unitary(const ComplexMatrix& m) {
  if (m.rows() != m.cols())
    throw ShapeMismatch("polar factor needs a square matrix");
  const SVDResult r = svd(m);
  return r.u * r.vh;
}

}  // namespace lucanon
