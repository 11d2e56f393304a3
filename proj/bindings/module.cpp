// Python bindings for the core operations: state construction, HOSVD,
// equivalence decisions, witnesses, and the deterministic generators.
// Matrices cross the boundary as nested lists of complex numbers; verdicts
// and reports come back as plain dicts.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "lucanon/equivalence.hpp"
#include "lucanon/hosvd.hpp"
#include "lucanon/io.hpp"
#include "lucanon/random.hpp"
#include "lucanon/symmetry.hpp"

namespace py = pybind11;
using namespace lucanon;

namespace {

py::list matrix_to_list(const ComplexMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(m(i, j));
    rows.append(row);
  }
  return rows;
}

ComplexMatrix list_to_matrix(const std::vector<std::vector<Cx>>& rows) {
  if (rows.empty()) throw ShapeMismatch("matrix must be nonempty");
  ComplexMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw ShapeMismatch("matrix rows must have equal length");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

DecisionOptions make_options(double tol_equiv, double tol_spec,
                             double tol_degen, double tol_zero, int restarts,
                             int max_iters, double conv_tol,
                             std::uint64_t seed) {
  DecisionOptions o;
  o.tol_equiv = tol_equiv;
  o.tol_spec = tol_spec;
  o.tol_degen = tol_degen;
  o.tol_zero = tol_zero;
  o.restarts = restarts;
  o.max_iters = max_iters;
  o.conv_tol = conv_tol;
  o.seed = seed;
  return o;
}

Witness witness_from_lists(const std::vector<std::vector<std::vector<Cx>>>& ms,
                           double residual) {
  Witness w;
  w.residual = residual;
  for (const auto& rows : ms) w.unitaries.emplace_back(list_to_matrix(rows));
  return w;
}

py::dict verdict_to_dict(const Verdict& v) {
  py::dict d;
  d["tag"] = std::string(to_string(v.tag));
  d["note"] = v.note;
  d["near_degenerate"] = v.near_degenerate;
  d["inputs_normalized"] = v.inputs_normalized;
  if (v.witness) {
    py::list ws;
    for (const auto& u : v.witness->unitaries)
      ws.append(matrix_to_list(u.matrix()));
    d["witness"] = ws;
    d["residual"] = v.witness->residual;
  } else {
    d["witness"] = py::none();
    d["residual"] = py::none();
  }
  if (v.spectra_mismatch)
    d["spectra_mismatch"] =
        py::make_tuple(v.spectra_mismatch->mode, v.spectra_mismatch->index,
                       v.spectra_mismatch->delta);
  else
    d["spectra_mismatch"] = py::none();
  d["phase_modulus_deviation"] = v.phase_modulus_deviation;
  d["phase_closure_deviation"] = v.phase_closure_deviation;
  d["best_residual"] = v.best_residual;
  d["restarts_used"] = v.restarts_used;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Canonical forms and local-unitary equivalence for multipartite pure "
      "states";
  m.attr("__version__") = kVersion;

  py::class_<StateTensor>(m, "StateTensor")
      .def_property_readonly(
          "dims", [](const StateTensor& t) { return t.dims(); })
      .def_property_readonly("amplitudes",
                             [](const StateTensor& t) {
                               std::vector<Cx> v(t.size());
                               for (std::size_t e = 0; e < t.size(); ++e)
                                 v[e] = t[e];
                               return v;
                             })
      .def("__len__", [](const StateTensor& t) { return t.size(); });

  m.def(
      "state",
      [](const std::vector<std::size_t>& dims, const std::vector<Cx>& amps) {
        return new_state(dims, std::vector<Cx>(amps));
      },
      py::arg("dims"), py::arg("amplitudes"),
      "Build a normalized-or-not state tensor from row-major amplitudes");

  m.def("norm", &norm, py::arg("t"));
  m.def("normalize", &normalize, py::arg("t"));

  m.def("random_state", &random_state, py::arg("dims"), py::arg("seed"),
        "Seeded random normalized state (bit-reproducible)");

  m.def(
      "perturb",
      [](const StateTensor& t, std::uint64_t seed) {
        std::vector<UnitaryMatrix> us;
        us.reserve(t.order());
        for (std::size_t n = 0; n < t.order(); ++n)
          us.push_back(haar_random_unitary(t.dims()[n], derive_seed(seed, n)));
        return multi_apply(t, us);
      },
      py::arg("t"), py::arg("seed"),
      "Apply seeded Haar-random local unitaries (planted-equivalence "
      "generator)");

  m.def(
      "haar_random_unitary",
      [](std::size_t dim, std::uint64_t seed) {
        return matrix_to_list(haar_random_unitary(dim, seed).matrix());
      },
      py::arg("dim"), py::arg("seed"));

  m.def(
      "hosvd",
      [](const StateTensor& t) {
        const HOSVDResult r = hosvd(t);
        py::dict d;
        d["core"] = r.core;
        py::list fs;
        for (const auto& f : r.factors) fs.append(matrix_to_list(f.matrix()));
        d["factors"] = fs;
        d["spectra"] = r.spectra;
        return d;
      },
      py::arg("t"),
      "Decompose into core, factor unitaries, and per-mode spectra");

  m.def(
      "spectra",
      [](const StateTensor& t) { return hosvd(t).spectra; }, py::arg("t"));

  m.def(
      "decide_lu",
      [](const StateTensor& a, const StateTensor& b, double tol_equiv,
         double tol_spec, double tol_degen, double tol_zero, int restarts,
         int max_iters, double conv_tol, std::uint64_t seed) {
        return verdict_to_dict(
            decide_lu(a, b,
                      make_options(tol_equiv, tol_spec, tol_degen, tol_zero,
                                   restarts, max_iters, conv_tol, seed)));
      },
      py::arg("a"), py::arg("b"), py::arg("tol_equiv") = 1e-8,
      py::arg("tol_spec") = 1e-9, py::arg("tol_degen") = 1e-8,
      py::arg("tol_zero") = 1e-10, py::arg("restarts") = 32,
      py::arg("max_iters") = 500, py::arg("conv_tol") = 1e-12,
      py::arg("seed") = 1,
      "Decide local-unitary equivalence; returns a verdict dict");

  m.def(
      "verify_witness",
      [](const StateTensor& a, const StateTensor& b,
         const std::vector<std::vector<std::vector<Cx>>>& ws, double tol) {
        const WitnessReport rep =
            verify_witness(a, b, witness_from_lists(ws, 0.0), tol);
        py::dict d;
        d["transform_residual"] = rep.transform_residual;
        d["unitarity_deviation"] = rep.unitarity_deviation;
        d["pass"] = rep.pass;
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("witness"), py::arg("tol") = 1e-8);

  m.def(
      "brute_force_lu_distance",
      [](const StateTensor& a, const StateTensor& b, int restarts,
         int max_iters, std::uint64_t seed) {
        DecisionOptions o;
        o.restarts = restarts;
        o.max_iters = max_iters;
        o.seed = seed;
        const BruteForceResult r = brute_force_lu_distance(a, b, o);
        py::list ws;
        for (const auto& u : r.witness.unitaries)
          ws.append(matrix_to_list(u.matrix()));
        return py::make_tuple(r.distance, ws);
      },
      py::arg("a"), py::arg("b"), py::arg("restarts") = 32,
      py::arg("max_iters") = 500, py::arg("seed") = 1,
      "Unconstrained search oracle; returns (distance, unitaries)");

  m.def(
      "load_state",
      [](const std::string& path) { return load_state(path); },
      py::arg("path"));
  m.def(
      "save_state",
      [](const StateTensor& t, const std::string& path,
         const std::string& label) { save_state(t, path, label); },
      py::arg("t"), py::arg("path"), py::arg("label") = "");
}
