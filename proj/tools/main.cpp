// lucanon — canonical forms and local-unitary equivalence for multipartite
// pure states.
//
// Subcommands: canon, spectra, compare, random, perturb, verify-witness.
// Machine-readable results go to stdout, diagnostics and warnings to stderr.
// Exit codes: 0 equivalent / pass, 1 inequivalent / fail, 2 undecided,
// 64 usage, 65 input or file error, 70 internal numerical failure.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lucanon/equivalence.hpp"
#include "lucanon/format.hpp"
#include "lucanon/hosvd.hpp"
#include "lucanon/io.hpp"
#include "lucanon/random.hpp"
#include "lucanon/symmetry.hpp"

namespace {

using namespace lucanon;

// Factor matrices are serialized with the witness-file schema so one loader
// covers both (a factor file is a witness whose "residual" is 0).
void save_factors(const std::vector<UnitaryMatrix>& factors,
                  const std::string& path) {
  save_witness(Witness{factors, 0.0}, path, WitnessTolerances{});
}

void print_mode_lines(const HOSVDResult& r, double tol_degen,
                      double tol_zero) {
  const SymmetryStructure s =
      symmetry_structure(r.spectra, tol_degen, tol_zero);
  for (std::size_t n = 0; n < r.spectra.size(); ++n)
    std::cout << format_mode_line(n, r.spectra[n], s.modes[n]) << '\n';
}

int run_canon(const std::string& in, const std::string& core_out,
              const std::string& factors_out, double tol_degen,
              double tol_zero) {
  std::string label;
  const StateTensor t = load_state(in, &label);
  const HOSVDResult r = hosvd(t);
  print_mode_lines(r, tol_degen, tol_zero);
  save_state(r.core, core_out, label.empty() ? "" : label + "-core");
  save_factors(r.factors, factors_out);
  std::cerr << "wrote " << core_out << " and " << factors_out << '\n';
  return 0;
}

int run_spectra(const std::string& in, double tol_degen, double tol_zero) {
  const StateTensor t = load_state(in);
  print_mode_lines(hosvd(t), tol_degen, tol_zero);
  return 0;
}

int run_compare(const std::string& in_a, const std::string& in_b,
                const DecisionOptions& opts, const std::string& witness_out) {
  const StateTensor a = load_state(in_a);
  const StateTensor b = load_state(in_b);
  const Verdict v = decide_lu(a, b, opts);

  if (!v.note.empty()) std::cerr << "note: " << v.note << '\n';
  if (v.near_degenerate)
    std::cerr << "warning: spectra nearly degenerate at tol_degen; verdict "
                 "may be sensitive to --tol-degen\n";

  std::cout << "verdict " << to_string(v.tag) << '\n';
  switch (v.tag) {
    case VerdictTag::Equivalent: {
      save_witness(*v.witness, witness_out,
                   WitnessTolerances{opts.tol_equiv, opts.tol_spec,
                                     opts.tol_degen});
      std::cout << "residual " << fmt_g12(v.witness->residual) << '\n';
      std::cout << "witness " << witness_out << '\n';
      return 0;
    }
    case VerdictTag::InequivalentSpectra: {
      std::cout << "mode " << v.spectra_mismatch->mode + 1 << " index "
                << v.spectra_mismatch->index + 1 << " delta "
                << fmt_g12(v.spectra_mismatch->delta) << '\n';
      return 1;
    }
    case VerdictTag::InequivalentPhase: {
      std::cout << "modulus_deviation " << fmt_g12(v.phase_modulus_deviation)
                << '\n';
      std::cout << "closure_deviation " << fmt_g12(v.phase_closure_deviation)
                << '\n';
      return 1;
    }
    case VerdictTag::Undecided: {
      std::cout << "best_residual " << fmt_g12(v.best_residual) << '\n';
      std::cout << "restarts " << v.restarts_used << '\n';
      return 2;
    }
  }
  return 70;  // unreachable
}

int run_random(const std::vector<std::size_t>& dims, std::uint64_t seed,
               const std::string& out) {
  save_state(random_state(dims, seed), out);
  std::cerr << "wrote " << out << '\n';
  return 0;
}

int run_perturb(const std::string& in, std::uint64_t seed,
                const std::string& out) {
  std::string label;
  const StateTensor t = load_state(in, &label);
  std::vector<UnitaryMatrix> us;
  us.reserve(t.order());
  for (std::size_t n = 0; n < t.order(); ++n)
    us.push_back(haar_random_unitary(t.dims()[n], derive_seed(seed, n)));
  save_state(multi_apply(t, us), out, label);
  std::cerr << "wrote " << out << '\n';
  return 0;
}

int run_verify_witness(const std::string& in_a, const std::string& in_b,
                       const std::string& in_w, double tol) {
  const StateTensor a = load_state(in_a);
  const StateTensor b = load_state(in_b);
  const Witness w = load_witness(in_w);
  const WitnessReport rep = verify_witness(a, b, w, tol);
  std::cout << "transform_residual " << fmt_g12(rep.transform_residual)
            << '\n';
  std::cout << "unitarity_deviation " << fmt_g12(rep.unitarity_deviation)
            << '\n';
  std::cout << "result " << (rep.pass ? "pass" : "fail") << '\n';
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Canonical forms and local-unitary equivalence for multipartite pure "
      "states"};
  app.require_subcommand(1);

  // canon
  std::string canon_in, canon_core = "core.json", canon_factors = "factors.json";
  double canon_degen = kTolDegenDefault, canon_zero = kTolZeroDefault;
  auto* canon = app.add_subcommand(
      "canon", "Decompose a state; write its core and factor matrices");
  canon->add_option("state", canon_in, "input state file")->required();
  canon->add_option("-o,--core", canon_core, "core output file");
  canon->add_option("--factors", canon_factors, "factor-matrix output file");
  canon->add_option("--tol-degen", canon_degen, "degeneracy tolerance");
  canon->add_option("--tol-zero", canon_zero, "zero singular-value cutoff");

  // spectra
  std::string spectra_in;
  double spectra_degen = kTolDegenDefault, spectra_zero = kTolZeroDefault;
  auto* spectra = app.add_subcommand(
      "spectra", "Print per-mode singular values and degeneracy partitions");
  spectra->add_option("state", spectra_in, "input state file")->required();
  spectra->add_option("--tol-degen", spectra_degen, "degeneracy tolerance");
  spectra->add_option("--tol-zero", spectra_zero, "zero singular-value cutoff");

  // compare
  std::string cmp_a, cmp_b, cmp_witness = "witness.json";
  DecisionOptions opts;
  auto* compare = app.add_subcommand(
      "compare", "Decide local-unitary equivalence of two states");
  compare->add_option("a", cmp_a, "first state file")->required();
  compare->add_option("b", cmp_b, "second state file")->required();
  compare->add_option("-o,--witness", cmp_witness,
                      "witness output file (written on Equivalent)");
  compare->add_option("--tol-equiv", opts.tol_equiv, "equivalence tolerance");
  compare->add_option("--tol-spec", opts.tol_spec,
                      "spectra comparison tolerance");
  compare->add_option("--tol-degen", opts.tol_degen, "degeneracy tolerance");
  compare->add_option("--restarts", opts.restarts,
                      "total search starts (first is the identity)");
  compare->add_option("--seed", opts.seed, "seed for randomized restarts");
  compare->add_option("--max-iters", opts.max_iters,
                      "iteration cap per restart");

  // random
  std::vector<std::size_t> rnd_dims;
  std::uint64_t rnd_seed = 1;
  std::string rnd_out;
  auto* random = app.add_subcommand(
      "random", "Write a seeded random normalized state");
  random->add_option("--dims", rnd_dims, "dimensions, e.g. 2,2,2")
      ->required()
      ->delimiter(',');
  random->add_option("--seed", rnd_seed, "generator seed");
  random->add_option("-o,--out", rnd_out, "output state file")->required();

  // perturb
  std::string pert_in, pert_out;
  std::uint64_t pert_seed = 1;
  auto* perturb = app.add_subcommand(
      "perturb",
      "Apply seeded Haar-random local unitaries (planted-equivalence "
      "generator)");
  perturb->add_option("state", pert_in, "input state file")->required();
  perturb->add_option("--seed", pert_seed, "generator seed");
  perturb->add_option("-o,--out", pert_out, "output state file")->required();

  // verify-witness
  std::string vw_a, vw_b, vw_w;
  double vw_tol = 1e-8;
  auto* vw = app.add_subcommand(
      "verify-witness", "Check a stored witness against a pair of states");
  vw->add_option("a", vw_a, "first state file")->required();
  vw->add_option("b", vw_b, "second state file")->required();
  vw->add_option("witness", vw_w, "witness file")->required();
  vw->add_option("--tol", vw_tol, "acceptance tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (*canon)
      return run_canon(canon_in, canon_core, canon_factors, canon_degen,
                       canon_zero);
    if (*spectra) return run_spectra(spectra_in, spectra_degen, spectra_zero);
    if (*compare) return run_compare(cmp_a, cmp_b, opts, cmp_witness);
    if (*random) return run_random(rnd_dims, rnd_seed, rnd_out);
    if (*perturb) return run_perturb(pert_in, pert_seed, pert_out);
    if (*vw) return run_verify_witness(vw_a, vw_b, vw_w, vw_tol);
  } catch (const NumericalFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 70;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 65;
  }
  return 64;
}
