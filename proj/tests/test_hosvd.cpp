#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "lucanon/hosvd.hpp"
#include "lucanon/random.hpp"
#include "lucanon/tensor.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace lucanon;
using helpers::dist;

namespace {

const std::vector<std::vector<std::size_t>> kDimSets = {
    {2, 2}, {2, 2, 2}, {3, 2, 2}, {2, 2, 2, 2}, {3, 3, 3}, {4, 4}};

}  // namespace

TEST_CASE("hosvd of GHZ keeps the state as its own core") {
  const StateTensor g = helpers::ghz();
  const HOSVDResult r = hosvd(g);
  const double h = 1.0 / std::sqrt(2.0);
  for (std::size_t n = 0; n < 3; ++n) {
    REQUIRE(r.spectra[n].size() == 2);
    CHECK(std::abs(r.spectra[n][0] - h) <= 1e-12);
    CHECK(std::abs(r.spectra[n][1] - h) <= 1e-12);
  }
  // Core equals GHZ up to per-mode phases: same support, same moduli.
  CHECK(std::abs(std::abs(r.core[0]) - h) <= 1e-12);
  CHECK(std::abs(std::abs(r.core[7]) - h) <= 1e-12);
  for (std::size_t e : {1, 2, 3, 4, 5, 6})
    CHECK(std::abs(r.core[e]) <= 1e-12);
}

TEST_CASE("hosvd W-state spectra match the Gram oracle") {
  const StateTensor w = helpers::w_state();
  const HOSVDResult r = hosvd(w);
  for (std::size_t n = 0; n < 3; ++n) {
    const std::vector<double> expect = oracles::gram2_spectrum(unfold(w, n));
    CHECK(std::abs(r.spectra[n][0] - expect[0]) <= 1e-12);
    CHECK(std::abs(r.spectra[n][1] - expect[1]) <= 1e-12);
    // Frozen oracle values: sqrt(2/3) and sqrt(1/3).
    CHECK(std::abs(r.spectra[n][0] - 0.8164965809277260) <= 1e-13);
    CHECK(std::abs(r.spectra[n][1] - 0.5773502691896257) <= 1e-13);
  }
}

TEST_CASE("hosvd of the diagonal fixture") {
  const HOSVDResult r = hosvd(helpers::diag44());
  const double g = std::sqrt(0.1);
  for (std::size_t n = 0; n < 2; ++n) {
    CHECK(std::abs(r.spectra[n][0] - 0.8) <= 1e-12);
    CHECK(std::abs(r.spectra[n][1] - 0.4) <= 1e-12);
    CHECK(std::abs(r.spectra[n][2] - g) <= 1e-12);
    CHECK(std::abs(r.spectra[n][3] - g) <= 1e-12);
  }
}

TEST_CASE("hosvd invariants hold on random states") {
  std::uint64_t seed = 200;
  for (const auto& dims : kDimSets) {
    for (int rep = 0; rep < 5; ++rep) {
      const StateTensor t = random_state(dims, seed++);
      const HOSVDResult r = hosvd(t);
      const CoreReport rep_out = verify_core(r, t, 1e-10);
      CAPTURE(dims.size());
      CHECK(rep_out.pass);
      CHECK(rep_out.reconstruction_error <= 1e-10);
      CHECK(rep_out.max_cross_inner <= 1e-10);
      CHECK(rep_out.spectrum_mismatch <= 1e-12);
      CHECK(rep_out.ordering_violation <= 1e-12);
      for (std::size_t n = 0; n < dims.size(); ++n) {
        double energy = 0.0;
        for (double s : r.spectra[n]) energy += s * s;
        CHECK(std::abs(energy - 1.0) <= 1e-12);
      }
    }
  }
}

TEST_CASE("verify_core flags injected faults") {
  SUBCASE("swapped subtensors break the ordering") {
    const StateTensor w = helpers::w_state();
    HOSVDResult r = hosvd(w);
    // Swap the two mode-1 slices of the core (first/second half of the
    // flat data): norms become ascending.
    StateTensor tampered = r.core;
    for (std::size_t e = 0; e < 4; ++e)
      std::swap(tampered[e], tampered[e + 4]);
    HOSVDResult bad{tampered, r.factors, r.spectra};
    const CoreReport rep = verify_core(bad, w, 1e-10);
    CHECK_FALSE(rep.pass);
    CHECK(rep.ordering_violation > 1e-10);
  }

  SUBCASE("identity factors fail reconstruction on an entangled state") {
    const StateTensor t = random_state({2, 2, 2}, 301);
    HOSVDResult r = hosvd(t);
    std::vector<UnitaryMatrix> ids{UnitaryMatrix::identity(2),
                                   UnitaryMatrix::identity(2),
                                   UnitaryMatrix::identity(2)};
    HOSVDResult bad{r.core, ids, r.spectra};
    const CoreReport rep = verify_core(bad, t, 1e-10);
    CHECK_FALSE(rep.pass);
    CHECK(rep.reconstruction_error > 1e-10);
  }
}

TEST_CASE("reduced density matrices") {
  // Bell state: maximally mixed marginal.
  const double h = 1.0 / std::sqrt(2.0);
  const StateTensor bell =
      new_state({2, 2}, {Cx(h, 0), Cx(0, 0), Cx(0, 0), Cx(h, 0)});
  const ComplexMatrix rho = reduced_density(bell, 0);
  CHECK(std::abs(rho(0, 0) - Cx(0.5, 0)) <= 1e-15);
  CHECK(std::abs(rho(1, 1) - Cx(0.5, 0)) <= 1e-15);
  CHECK(std::abs(rho(0, 1)) <= 1e-15);

  // Product state: pure marginal.
  const StateTensor p =
      new_state({2, 2}, {Cx(1, 0), Cx(0, 0), Cx(0, 0), Cx(0, 0)});
  const ComplexMatrix rho_p = reduced_density(p, 0);
  CHECK(std::abs(rho_p(0, 0) - Cx(1, 0)) <= 1e-15);
  CHECK(std::abs(rho_p(1, 1)) <= 1e-15);

  // Random state: eigenvalues equal squared spectra; trace equals norm^2.
  const StateTensor t = random_state({3, 2, 2}, 307);
  const HOSVDResult r = hosvd(t);
  for (std::size_t n = 0; n < 3; ++n) {
    const ComplexMatrix rn = reduced_density(t, n);
    Cx tr(0, 0);
    for (std::size_t i = 0; i < rn.rows(); ++i) tr += rn(i, i);
    CHECK(std::abs(tr - Cx(1, 0)) <= 1e-12);
    const std::vector<double> lam = hermitian_eigenvalues(rn);
    for (std::size_t i = 0; i < lam.size(); ++i)
      CHECK(std::abs(lam[i] - r.spectra[n][i] * r.spectra[n][i]) <= 1e-10);
  }

  CHECK_THROWS_AS(reduced_density(t, 3), ModeOutOfRange);
}

TEST_CASE("sorted trace spectrum equals squared singular values") {
  const StateTensor g = helpers::ghz();
  for (std::size_t n = 0; n < 3; ++n) {
    const std::vector<double> lam = sorted_trace_spectrum(g, n);
    CHECK(std::abs(lam[0] - 0.5) <= 1e-12);
    CHECK(std::abs(lam[1] - 0.5) <= 1e-12);
  }

  const StateTensor w = helpers::w_state();
  for (std::size_t n = 0; n < 3; ++n) {
    const std::vector<double> lam = sorted_trace_spectrum(w, n);
    const std::vector<double> sig = oracles::gram2_spectrum(unfold(w, n));
    CHECK(std::abs(lam[0] - sig[0] * sig[0]) <= 1e-12);
    CHECK(std::abs(lam[1] - sig[1] * sig[1]) <= 1e-12);
    CHECK(std::abs(lam[0] - 2.0 / 3.0) <= 1e-12);
    CHECK(std::abs(lam[1] - 1.0 / 3.0) <= 1e-12);
  }

  const StateTensor f = helpers::diag44();
  for (std::size_t n = 0; n < 2; ++n) {
    const std::vector<double> lam = sorted_trace_spectrum(f, n);
    CHECK(std::abs(lam[0] - 0.64) <= 1e-12);
    CHECK(std::abs(lam[1] - 0.16) <= 1e-12);
    CHECK(std::abs(lam[2] - 0.1) <= 1e-12);
    CHECK(std::abs(lam[3] - 0.1) <= 1e-12);
  }

  // Random states: the eigensolver route and the SVD route agree to 1e-10.
  std::uint64_t seed = 400;
  for (const auto& dims : kDimSets) {
    const StateTensor t = random_state(dims, seed++);
    const HOSVDResult r = hosvd(t);
    for (std::size_t n = 0; n < dims.size(); ++n) {
      const std::vector<double> lam = sorted_trace_spectrum(t, n);
      REQUIRE(lam.size() == r.spectra[n].size());
      for (std::size_t i = 0; i < lam.size(); ++i)
        CHECK(std::abs(lam[i] - r.spectra[n][i] * r.spectra[n][i]) <= 1e-10);
    }
  }
}

TEST_CASE("spectra are invariant under local unitaries") {
  std::uint64_t seed = 500;
  for (const auto& dims : kDimSets) {
    for (int rep = 0; rep < 3; ++rep) {
      const StateTensor t = random_state(dims, seed++);
      std::vector<UnitaryMatrix> us;
      for (std::size_t n = 0; n < dims.size(); ++n)
        us.push_back(haar_random_unitary(dims[n], seed++));
      const HOSVDResult ra = hosvd(t);
      const HOSVDResult rb = hosvd(multi_apply(t, us));
      for (std::size_t n = 0; n < dims.size(); ++n)
        for (std::size_t i = 0; i < ra.spectra[n].size(); ++i)
          CHECK(std::abs(ra.spectra[n][i] - rb.spectra[n][i]) <= 1e-9);
    }
  }
}
