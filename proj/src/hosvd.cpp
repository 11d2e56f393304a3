#include "lucanon/hosvd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lucanon {

HOSVDResult hosvd(const StateTensor& t) {
  const std::size_t order = t.order();
  std::vector<UnitaryMatrix> factors;
  std::vector<std::vector<double>> spectra;
  factors.reserve(order);
  spectra.reserve(order);

  for (std::size_t n = 0; n < order; ++n) {
    SVDResult s = svd(unfold(t, n));
    // Mode spectrum: singular values padded with zeros up to I_n (the
    // unfolding has min(I_n, rest) of them; missing directions are exact
    // kernel directions of the reduced density matrix).
    s.sigma.resize(t.dims()[n], 0.0);
    spectra.push_back(std::move(s.sigma));
    factors.push_back(UnitaryMatrix::trusted(std::move(s.u)));
  }

  // Core: every factor's adjoint applied to the input.
  StateTensor core = t;
  for (std::size_t n = 0; n < order; ++n)
    core = mode_apply(core, n, factors[n].adjoint());

  return HOSVDResult{std::move(core), std::move(factors), std::move(spectra)};
}

CoreReport verify_core(const HOSVDResult& r, const StateTensor& original,
                       double tol) {
  CoreReport rep{};
  rep.tol = tol;

  // Reconstruction.
  const StateTensor rebuilt = multi_apply(r.core, r.factors);
  double rec = 0.0;
  if (rebuilt.dims() == original.dims()) {
    double s = 0.0;
    for (std::size_t e = 0; e < rebuilt.size(); ++e)
      s += std::norm(rebuilt[e] - original[e]);
    rec = std::sqrt(s);
  } else {
    rec = std::numeric_limits<double>::infinity();
  }
  rep.reconstruction_error = rec;

  // Subtensor orthogonality, norms vs recorded spectra, and ordering of the
  // actual norms (ordering is judged on the core itself, not on the recorded
  // spectra, so a tampered core is caught even when its spectra list is
  // still descending).
  double cross = 0.0, mismatch = 0.0, ordering = 0.0;
  for (std::size_t n = 0; n < r.core.order(); ++n) {
    const ComplexMatrix m = unfold(r.core, n);
    const std::size_t dn = m.rows();
    std::vector<double> actual(dn);
    for (std::size_t i = 0; i < dn; ++i) {
      double s = 0.0;
      for (std::size_t c = 0; c < m.cols(); ++c) s += std::norm(m(i, c));
      actual[i] = std::sqrt(s);
      for (std::size_t j = 0; j < i; ++j) {
        Cx g(0.0, 0.0);  // <subtensor_j, subtensor_i>
        for (std::size_t c = 0; c < m.cols(); ++c)
          g += m(i, c) * std::conj(m(j, c));
        cross = std::max(cross, std::abs(g));
      }
    }
    for (std::size_t i = 0; i < dn; ++i) {
      if (n < r.spectra.size() && i < r.spectra[n].size())
        mismatch = std::max(mismatch, std::abs(actual[i] - r.spectra[n][i]));
      else
        mismatch = std::numeric_limits<double>::infinity();
      if (i + 1 < dn)
        ordering = std::max(ordering, actual[i + 1] - actual[i]);
    }
  }
  rep.max_cross_inner = cross;
  rep.spectrum_mismatch = mismatch;
  rep.ordering_violation = std::max(0.0, ordering);

  rep.pass = rep.reconstruction_error <= tol && rep.max_cross_inner <= tol &&
             rep.spectrum_mismatch <= tol && rep.ordering_violation <= tol;
  return rep;
}

ComplexMatrix reduced_density(const StateTensor& t, std::size_t mode) {
  const ComplexMatrix m = unfold(t, mode);
  const std::size_t d = m.rows();
  ComplexMatrix rho(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Cx s(0.0, 0.0);
      for (std::size_t c = 0; c < m.cols(); ++c)
        s += m(i, c) * std::conj(m(j, c));
      rho(i, j) = s;
    }
  return rho;
}

std::vector<double> sorted_trace_spectrum(const StateTensor& t,
                                          std::size_t mode) {
  return hermitian_eigenvalues(reduced_density(t, mode));
}

}  // namespace lucanon
