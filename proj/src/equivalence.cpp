#include "lucanon/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <utility>

#include "lucanon/random.hpp"
#include "lucanon/svd.hpp"

namespace lucanon {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Entries below this modulus are excluded from the phase system inside
// decide_lu: the phase of an entry of modulus m carries ~1e-15/m of numerical
// noise, so entries near the raw zero cutoff would let fuzz masquerade as an
// infeasibility certificate.  Mismatches confined to smaller amplitudes
// cannot move the end-to-end witness residual past tol_equiv anyway.
constexpr double kPhaseSupportFloor = 1e-6;

double wrap_pi(double x) { return std::remainder(x, kTwoPi); }

double diff_norm(const StateTensor& x, const StateTensor& y) {
  double s = 0.0;
  for (std::size_t e = 0; e < x.size(); ++e) s += std::norm(x[e] - y[e]);
  return std::sqrt(s);
}

void check_partition_covers(const SymmetryStructure& s,
                            const std::vector<std::size_t>& dims) {
  if (s.modes.size() != dims.size())
    throw PreconditionViolated("structure covers wrong number of modes");
  for (std::size_t n = 0; n < dims.size(); ++n) {
    std::size_t at = 0;
    for (const auto& b : s.modes[n].blocks) {
      if (b.begin != at || b.end <= b.begin)
        throw PreconditionViolated("structure blocks must tile the mode");
      at = b.end;
    }
    if (at != dims[n])
      throw PreconditionViolated("structure does not cover mode dimension");
  }
}

}  // namespace

// ── solve_phase_symmetry ─────────────────────────────────────────────────────

PhaseSolveReport solve_phase_symmetry(const StateTensor& coreA,
                                      const StateTensor& coreB, double tol,
                                      double tol_zero,
                                      const SymmetryStructure* structure) {
  if (coreA.dims() != coreB.dims())
    throw DimensionMismatch("phase solve requires identical dims");
  if (structure) {
    for (const auto& m : structure->modes)
      for (const auto& b : m.blocks)
        if (b.size() > 1)
          throw PreconditionViolated(
              "phase solve requires all symmetry blocks of size 1");
  }

  PhaseSolveReport rep;
  const auto& dims = coreA.dims();
  const std::size_t order = coreA.order();

  // Stage 1: entrywise moduli must already agree (phases can't fix them).
  double mdev = 0.0;
  for (std::size_t e = 0; e < coreA.size(); ++e)
    mdev = std::max(mdev, std::abs(std::abs(coreA[e]) - std::abs(coreB[e])));
  rep.modulus_deviation = mdev;
  if (mdev > tol) return rep;

  // Stage 2: unknown layout.  theta[n][i] with the gauge theta[n][0] = 0
  // fixed for n >= 1 (phases are determined only up to per-mode constants
  // summing to zero, and this uses exactly that freedom).
  std::vector<std::size_t> offset(order, 0);
  std::size_t num_unknowns = dims[0];
  for (std::size_t n = 1; n < order; ++n) {
    offset[n] = num_unknowns;
    num_unknowns += dims[n] - 1;
  }
  const auto col_of = [&](std::size_t n, std::size_t i) -> std::size_t {
    return n == 0 ? i : offset[n] + (i - 1);  // caller skips gauge-fixed i==0
  };

  // Stage 3: one equation per common-support entry:
  //   sum_n theta[n][i_n]  ==  arg(B_e / A_e)   (mod 2*pi).
  struct Row {
    std::vector<long long> a;
    double rhs;
    double amp;  // sum of |integer multipliers| ever applied to this row
  };
  std::vector<Row> rows;
  std::vector<std::size_t> idx(order, 0);
  for (std::size_t e = 0; e < coreA.size(); ++e) {
    if (std::abs(coreA[e]) <= tol_zero || std::abs(coreB[e]) <= tol_zero)
      continue;
    std::size_t rem = e;
    for (std::size_t n = order; n-- > 0;) {
      idx[n] = rem % dims[n];
      rem /= dims[n];
    }
    Row r{std::vector<long long>(num_unknowns, 0),
          std::arg(coreB[e] / coreA[e]), 1.0};
    for (std::size_t n = 0; n < order; ++n)
      if (n == 0 || idx[n] > 0) r.a[col_of(n, idx[n])] += 1;
    rows.push_back(std::move(r));
  }

  // Stage 4: integer-preserving elimination.  The only row operation is
  // "subtract an integer multiple of another row", so any row that ends up
  // with all-zero coefficients is a genuine integer combination of original
  // equations; its right side must vanish mod 2*pi (within tol scaled by the
  // accumulated amplification) or the system is infeasible — a certificate,
  // not a search failure.
  std::vector<bool> is_pivot(rows.size(), false);
  std::vector<long long> pivot_of_col(num_unknowns, -1);
  for (std::size_t j = 0; j < num_unknowns; ++j) {
    for (;;) {
      // Reducer: active row with the smallest nonzero |a[j]|.
      std::size_t r0 = rows.size();
      long long best = 0;
      std::size_t count = 0;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (is_pivot[r] || rows[r].a[j] == 0) continue;
        ++count;
        if (r0 == rows.size() || std::llabs(rows[r].a[j]) < std::llabs(best)) {
          r0 = r;
          best = rows[r].a[j];
        }
      }
      if (count == 0) break;  // free column
      if (count == 1) {       // r0 is the pivot for column j
        is_pivot[r0] = true;
        pivot_of_col[j] = static_cast<long long>(r0);
        break;
      }
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == r0 || is_pivot[r] || rows[r].a[j] == 0) continue;
        const long long q = std::llround(static_cast<double>(rows[r].a[j]) /
                                         static_cast<double>(best));
        if (q == 0) continue;  // |a[j]| already < |best|; next pass resolves
        for (std::size_t k = 0; k < num_unknowns; ++k) {
          rows[r].a[k] -= q * rows[r0].a[k];
          if (std::llabs(rows[r].a[k]) > (1ll << 40))
            throw NumericalFailure("phase elimination coefficient blow-up");
        }
        rows[r].rhs -= static_cast<double>(q) * rows[r0].rhs;
        rows[r].amp += std::llabs(q) * rows[r0].amp;
      }
    }
  }

  // Zero rows: closure check mod 2*pi.
  double cdev = 0.0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (is_pivot[r]) continue;
    cdev = std::max(cdev,
                    std::abs(wrap_pi(rows[r].rhs)) / std::max(1.0, rows[r].amp));
  }
  rep.closure_deviation = cdev;
  if (cdev > tol) return rep;

  // Stage 5: back substitution, bottom-up over pivot columns.  Pivot rows are
  // in echelon form (all coefficients left of the pivot are zero); for a
  // pivot d the branch x = wrap(rhs - tail)/d satisfies the row mod 2*pi.
  // Free unknowns stay 0.
  std::vector<double> x(num_unknowns, 0.0);
  for (std::size_t j = num_unknowns; j-- > 0;) {
    if (pivot_of_col[j] < 0) continue;
    const Row& row = rows[static_cast<std::size_t>(pivot_of_col[j])];
    double tail = 0.0;
    for (std::size_t k = j + 1; k < num_unknowns; ++k)
      tail += static_cast<double>(row.a[k]) * x[k];
    x[j] = wrap_pi(row.rhs - tail) / static_cast<double>(row.a[j]);
  }

  std::vector<std::vector<double>> phases(order);
  for (std::size_t n = 0; n < order; ++n) {
    phases[n].assign(dims[n], 0.0);
    for (std::size_t i = (n == 0 ? 0 : 1); i < dims[n]; ++i)
      phases[n][i] = x[col_of(n, i)];
  }
  rep.phases = std::move(phases);
  return rep;
}

// ── solve_block_symmetry ─────────────────────────────────────────────────────

namespace {

// One alternating pass: for each mode, the objective Re tr(Q† F) with
// F = unfold(coreB, n) * unfold(rest-applied coreA, n)† is maximized over
// block-diagonal unitaries by taking the polar factor of each diagonal block
// of F.  Each pass is a coordinate-ascent step, so the residual is
// nonincreasing.
void alternate_pass(const StateTensor& coreA, const StateTensor& coreB,
                    const SymmetryStructure* s,
                    std::vector<UnitaryMatrix>& qs) {
  const std::size_t order = coreA.order();
  for (std::size_t n = 0; n < order; ++n) {
    StateTensor X = coreA;
    for (std::size_t m = 0; m < order; ++m)
      if (m != n) X = mode_apply(X, m, qs[m]);
    const ComplexMatrix F = unfold(coreB, n) * unfold(X, n).adjoint();
    if (s) {
      ComplexMatrix Qn(F.rows(), F.cols());
      for (const auto& b : s->modes[n].blocks)
        Qn.set_block(b.begin, b.begin,
                     polar_unitary(F.block(b.begin, b.begin, b.size(),
                                           b.size())));
      qs[n] = UnitaryMatrix::trusted(std::move(Qn));
    } else {
      qs[n] = UnitaryMatrix::trusted(polar_unitary(F));
    }
  }
}

double transform_residual(const StateTensor& a, const StateTensor& b,
                          const std::vector<UnitaryMatrix>& qs) {
  return diff_norm(multi_apply(a, qs), b);
}

std::vector<UnitaryMatrix> identity_start(const std::vector<std::size_t>& dims) {
  std::vector<UnitaryMatrix> qs;
  qs.reserve(dims.size());
  for (std::size_t d : dims) qs.push_back(UnitaryMatrix::identity(d));
  return qs;
}

// Haar block-diagonal start respecting the structure; all draws come from one
// generator in fixed (mode, block) order, so a (seed, restart) pair fully
// determines the start.
std::vector<UnitaryMatrix> haar_block_start(const std::vector<std::size_t>& dims,
                                            const SymmetryStructure& s,
                                            Xoshiro256pp& rng) {
  std::vector<UnitaryMatrix> qs;
  qs.reserve(dims.size());
  for (std::size_t n = 0; n < dims.size(); ++n) {
    ComplexMatrix Qn(dims[n], dims[n]);
    for (const auto& b : s.modes[n].blocks)
      Qn.set_block(b.begin, b.begin,
                   haar_random_unitary(rng, b.size()).matrix());
    qs.push_back(UnitaryMatrix::trusted(std::move(Qn)));
  }
  return qs;
}

// Shared restart loop for the constrained search and the brute-force oracle
// (s == nullptr).  Success threshold: residual <= tol_success; with
// tol_success < 0 the loop never declares success and simply reports the best
// residual and unitaries found (oracle mode).
struct SearchOutcome {
  std::vector<UnitaryMatrix> best_qs;
  double best_residual = std::numeric_limits<double>::infinity();
  int winning_restart = -1;
  int restarts_tried = 0;
};

SearchOutcome restart_search(const StateTensor& coreA, const StateTensor& coreB,
                             const SymmetryStructure* s,
                             const DecisionOptions& opts, double tol_success) {
  SearchOutcome out;
  const int tries = std::max(1, opts.restarts);
  for (int r = 0; r < tries; ++r) {
    std::vector<UnitaryMatrix> qs;
    if (r == 0) {
      qs = identity_start(coreA.dims());
    } else if (s) {
      Xoshiro256pp rng(derive_seed(opts.seed, static_cast<std::uint64_t>(r)));
      qs = haar_block_start(coreA.dims(), *s, rng);
    } else {
      Xoshiro256pp rng(derive_seed(opts.seed, static_cast<std::uint64_t>(r)));
      std::vector<UnitaryMatrix> full;
      full.reserve(coreA.order());
      for (std::size_t d : coreA.dims())
        full.push_back(haar_random_unitary(rng, d));
      qs = std::move(full);
    }

    double res = transform_residual(coreA, coreB, qs);
    for (int it = 0; it < opts.max_iters; ++it) {
      if (tol_success >= 0.0 && res <= 0.25 * tol_success) break;
      if (res <= 1e-14) break;  // numerically exact; nothing left to polish
      alternate_pass(coreA, coreB, s, qs);
      const double next = transform_residual(coreA, coreB, qs);
      const bool stalled =
          std::abs(res - next) <= opts.conv_tol * std::max(res, 1e-300);
      res = next;
      if (stalled) break;
    }

    out.restarts_tried = r + 1;
    if (res < out.best_residual) {
      out.best_residual = res;
      out.best_qs = qs;
    }
    if (tol_success >= 0.0 && res <= tol_success) {
      out.winning_restart = r;
      break;  // first (lowest-index) success wins: deterministic
    }
  }
  return out;
}

}  // namespace

BlockSolveReport solve_block_symmetry(const StateTensor& coreA,
                                      const StateTensor& coreB,
                                      const SymmetryStructure& s,
                                      const DecisionOptions& opts) {
  if (coreA.dims() != coreB.dims())
    throw DimensionMismatch("block solve requires identical dims");
  check_partition_covers(s, coreA.dims());

  const SearchOutcome out =
      restart_search(coreA, coreB, &s, opts, opts.tol_equiv);
  BlockSolveReport rep;
  rep.best_residual = out.best_residual;
  rep.winning_restart = out.winning_restart;
  rep.restarts_tried = out.restarts_tried;
  if (out.winning_restart >= 0) rep.qs = out.best_qs;
  return rep;
}

// ── decide_lu ────────────────────────────────────────────────────────────────

namespace {

// Common coarsening of two interval partitions of the same length: blocks
// between the cut points both partitions agree on.  Identical partitions come
// back unchanged; a structural disagreement (possible only when a gap
// straddles the degeneracy tolerance) merges into the larger block, which
// only enlarges the searched symmetry group — safe, since every Equivalent
// verdict is re-verified end to end.
ModePartition merge_partitions(const ModePartition& a, const ModePartition& b,
                               const std::vector<double>& sigma,
                               double tol_zero) {
  std::vector<std::size_t> cuts;
  for (const auto& blk : a.blocks) {
    for (const auto& other : b.blocks)
      if (other.end == blk.end) {
        cuts.push_back(blk.end);
        break;
      }
  }
  ModePartition merged;
  merged.near_degenerate = a.near_degenerate || b.near_degenerate;
  std::size_t begin = 0;
  for (std::size_t end : cuts) {
    double sum = 0.0;
    bool zero = true;
    for (std::size_t i = begin; i < end; ++i) {
      sum += sigma[i];
      zero = zero && sigma[i] <= tol_zero;
    }
    merged.blocks.push_back(
        {begin, end, sum / static_cast<double>(end - begin), zero});
    begin = end;
  }
  return merged;
}

void append_note(std::string& note, const std::string& text) {
  if (!note.empty()) note += "; ";
  note += text;
}

Witness build_witness(const StateTensor& a, const StateTensor& b,
                      const HOSVDResult& ra, const HOSVDResult& rb,
                      const std::vector<UnitaryMatrix>& qs, double tol_equiv) {
  std::vector<UnitaryMatrix> ws;
  ws.reserve(qs.size());
  for (std::size_t n = 0; n < qs.size(); ++n)
    ws.emplace_back(rb.factors[n].matrix() * qs[n].matrix() *
                    ra.factors[n].matrix().adjoint());
  const double res = diff_norm(multi_apply(a, ws), b);
  if (!(res <= tol_equiv))
    throw NumericalFailure(
        "internal: witness failed end-to-end re-verification (residual " +
        std::to_string(res) + ")");
  return Witness{std::move(ws), res};
}

}  // namespace

const char* to_string(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::Equivalent: return "Equivalent";
    case VerdictTag::InequivalentSpectra: return "InequivalentSpectra";
    case VerdictTag::InequivalentPhase: return "InequivalentPhase";
    case VerdictTag::Undecided: return "Undecided";
  }
  return "Undecided";
}

Verdict decide_lu(const StateTensor& a0, const StateTensor& b0,
                  const DecisionOptions& opts) {
  if (a0.dims() != b0.dims())
    throw DimensionMismatch("decide_lu requires identical dims");

  Verdict v;
  StateTensor a = a0, b = b0;
  if (std::abs(norm(a) - 1.0) > 1e-12) {
    a = normalize(a);
    v.inputs_normalized = true;
  }
  if (std::abs(norm(b) - 1.0) > 1e-12) {
    b = normalize(b);
    v.inputs_normalized = true;
  }
  if (v.inputs_normalized)
    append_note(v.note, "inputs were renormalized before comparison");

  const HOSVDResult ra = hosvd(a);
  const HOSVDResult rb = hosvd(b);

  // Certified spectra comparison: the spectra are invariants, so any
  // entrywise gap beyond tol_spec settles the question.
  SpectraMismatch worst;
  bool any = false;
  for (std::size_t n = 0; n < ra.spectra.size(); ++n)
    for (std::size_t i = 0; i < ra.spectra[n].size(); ++i) {
      const double d = std::abs(ra.spectra[n][i] - rb.spectra[n][i]);
      if (!any || d > worst.delta) {
        worst = {n, i, d};
        any = true;
      }
    }
  const SymmetryStructure sa =
      symmetry_structure(ra.spectra, opts.tol_degen, opts.tol_zero);
  const SymmetryStructure sb =
      symmetry_structure(rb.spectra, opts.tol_degen, opts.tol_zero);
  v.near_degenerate = sa.any_near_degenerate() || sb.any_near_degenerate();

  if (any && worst.delta > opts.tol_spec) {
    v.tag = VerdictTag::InequivalentSpectra;
    v.spectra_mismatch = worst;
    append_note(v.note, "mode " + std::to_string(worst.mode + 1) +
                            " singular value " +
                            std::to_string(worst.index + 1) + " differs by " +
                            std::to_string(worst.delta));
    return v;
  }

  // Residual symmetry structure; a structural disagreement at the tolerance
  // boundary merges to the common coarsening (see merge_partitions).
  SymmetryStructure s;
  s.modes.reserve(sa.modes.size());
  bool merged_note = false;
  for (std::size_t n = 0; n < sa.modes.size(); ++n) {
    s.modes.push_back(merge_partitions(sa.modes[n], sb.modes[n],
                                       ra.spectra[n], opts.tol_zero));
    merged_note = merged_note ||
                  s.modes.back().blocks.size() != sa.modes[n].blocks.size() ||
                  s.modes.back().blocks.size() != sb.modes[n].blocks.size();
  }
  if (merged_note)
    append_note(v.note,
                "degeneracy partitions disagreed at the tolerance boundary; "
                "merged to their common coarsening");

  if (s.all_blocks_size_one()) {
    // Nondegenerate: the residual symmetry group is exactly the diagonal
    // phases, so the exact solve decides the question either way.
    const PhaseSolveReport rep = solve_phase_symmetry(
        ra.core, rb.core, opts.tol_equiv,
        std::max(opts.tol_zero, kPhaseSupportFloor), &s);
    v.phase_modulus_deviation = rep.modulus_deviation;
    v.phase_closure_deviation = rep.closure_deviation;
    if (!rep.phases) {
      v.tag = VerdictTag::InequivalentPhase;
      append_note(v.note, rep.modulus_deviation > opts.tol_equiv
                              ? "core moduli differ beyond tolerance"
                              : "phase system infeasible mod 2*pi");
      return v;
    }
    std::vector<UnitaryMatrix> qs;
    qs.reserve(a.order());
    for (std::size_t n = 0; n < a.order(); ++n) {
      ComplexMatrix d(a.dims()[n], a.dims()[n]);
      for (std::size_t i = 0; i < a.dims()[n]; ++i)
        d(i, i) = std::polar(1.0, (*rep.phases)[n][i]);
      qs.push_back(UnitaryMatrix::trusted(std::move(d)));
    }
    v.tag = VerdictTag::Equivalent;
    v.witness = build_witness(a, b, ra, rb, qs, opts.tol_equiv);
    v.best_residual = v.witness->residual;
    return v;
  }

  // Degenerate blocks: heuristic search over the block symmetry group.
  const BlockSolveReport rep = solve_block_symmetry(ra.core, rb.core, s, opts);
  v.best_residual = rep.best_residual;
  v.restarts_used = rep.restarts_tried;
  if (rep.qs) {
    v.tag = VerdictTag::Equivalent;
    v.witness = build_witness(a, b, ra, rb, *rep.qs, opts.tol_equiv);
    v.best_residual = v.witness->residual;
    return v;
  }
  v.tag = VerdictTag::Undecided;
  append_note(v.note,
              "block-symmetry search exhausted its restart budget; absence of "
              "a transformation is not an inequivalence certificate");
  return v;
}

// ── verify_witness ───────────────────────────────────────────────────────────

WitnessReport verify_witness(const StateTensor& a, const StateTensor& b,
                             const Witness& w, double tol) {
  WitnessReport rep;
  const double inf = std::numeric_limits<double>::infinity();
  if (a.dims() != b.dims() || w.unitaries.size() != a.order()) {
    rep.transform_residual = inf;
    rep.unitarity_deviation = inf;
    return rep;
  }
  for (std::size_t n = 0; n < a.order(); ++n)
    if (w.unitaries[n].dim() != a.dims()[n]) {
      rep.transform_residual = inf;
      rep.unitarity_deviation = inf;
      return rep;
    }
  for (const auto& u : w.unitaries)
    rep.unitarity_deviation =
        std::max(rep.unitarity_deviation, unitarity_deviation(u.matrix()));
  rep.transform_residual = diff_norm(multi_apply(a, w.unitaries), b);
  rep.pass =
      rep.transform_residual <= tol && rep.unitarity_deviation <= tol;
  return rep;
}

// ── brute_force_lu_distance ──────────────────────────────────────────────────

BruteForceResult brute_force_lu_distance(const StateTensor& a,
                                         const StateTensor& b,
                                         const DecisionOptions& opts) {
  if (a.dims() != b.dims())
    throw DimensionMismatch("distance requires identical dims");
  if (a.size() > 64)
    throw SizeGuard("brute-force search is limited to dimension product 64");

  // tol_success < 0: exhaust every restart and keep the best.
  const SearchOutcome out = restart_search(a, b, nullptr, opts, -1.0);
  BruteForceResult res;
  res.distance = out.best_residual;
  res.witness = Witness{out.best_qs, out.best_residual};
  return res;
}

}  // namespace lucanon
