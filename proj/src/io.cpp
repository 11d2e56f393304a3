#include "lucanon/io.hpp"

#include <cmath>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lucanon/errors.hpp"

namespace lucanon {

namespace {

// ordered_json keeps insertion order, so files are written with a stable
// field layout and reruns are byte-identical.
using Json = nlohmann::ordered_json;

Json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    // parse_error for malformed text, out_of_range for overflowing number
    // literals like 1e999 — either way the file is unusable.
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_file(const Json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw Error("write to " + path.string() + " failed");
}

double finite_number(const Json& j, const std::string& where) {
  if (!j.is_number())
    throw ParseError(where + ": expected a number, got " + std::string(j.type_name()));
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ParseError(where + ": number is not finite");
  return x;
}

// An [re, im] pair.
Cx complex_entry(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError(where + ": expected [re, im]");
  return {finite_number(j[0], where + "[0]"), finite_number(j[1], where + "[1]")};
}

Json complex_out(const Cx& z, const std::string& where) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw ParseError(where + ": amplitude is not finite");
  return Json::array({z.real(), z.imag()});
}

}  // namespace

// ── states ───────────────────────────────────────────────────────────────────

StateTensor load_state(const std::filesystem::path& path,
                       std::string* label_out, std::ostream* diag) {
  const Json j = parse_file(path);
  if (!j.is_object()) throw ParseError(path.string() + ": expected an object");
  if (!j.contains("dims") || !j["dims"].is_array())
    throw ParseError(path.string() + ": \"dims\" must be an array");
  if (!j.contains("amplitudes") || !j["amplitudes"].is_array())
    throw ParseError(path.string() + ": \"amplitudes\" must be an array");

  std::vector<std::size_t> dims;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<long long>() < 1)
      throw ParseError(path.string() + ": \"dims\" entries must be integers >= 1");
    dims.push_back(d.get<std::size_t>());
  }

  std::vector<Cx> amps;
  amps.reserve(j["amplitudes"].size());
  for (std::size_t i = 0; i < j["amplitudes"].size(); ++i)
    amps.push_back(complex_entry(j["amplitudes"][i],
                                 path.string() + ": amplitudes[" +
                                     std::to_string(i) + "]"));

  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string())
      throw ParseError(path.string() + ": \"label\" must be a string");
    label = j["label"].get<std::string>();
  }
  if (label_out) *label_out = label;

  StateTensor t = [&] {
    try {
      return new_state(dims, std::move(amps));
    } catch (const Error& e) {
      throw ParseError(path.string() + ": " + e.what());
    }
  }();

  const double nrm = norm(t);
  if (std::abs(nrm - 1.0) > 1e-6) {
    std::ostream& os = diag ? *diag : std::cerr;
    os << "warning: " << path.string() << " has norm " << nrm
       << "; normalizing\n";
    t = normalize(t);
  }
  return t;
}

void save_state(const StateTensor& t, const std::filesystem::path& path,
                const std::string& label) {
  Json j;
  j["dims"] = t.dims();
  Json amps = Json::array();
  for (std::size_t e = 0; e < t.size(); ++e)
    amps.push_back(complex_out(t[e], "amplitudes[" + std::to_string(e) + "]"));
  j["amplitudes"] = std::move(amps);
  if (!label.empty()) j["label"] = label;
  write_file(j, path);
}

// ── witnesses ────────────────────────────────────────────────────────────────

void save_witness(const Witness& w, const std::filesystem::path& path,
                  const WitnessTolerances& tols) {
  Json j;
  Json us = Json::array();
  for (std::size_t n = 0; n < w.unitaries.size(); ++n) {
    const ComplexMatrix& m = w.unitaries[n].matrix();
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t k = 0; k < m.cols(); ++k)
        entries.push_back(complex_out(
            m(i, k), "unitaries[" + std::to_string(n) + "]"));
    us.push_back(std::move(entries));
  }
  j["unitaries"] = std::move(us);
  j["residual"] = w.residual;
  j["tolerances"] = {{"tol_equiv", tols.tol_equiv},
                     {"tol_spec", tols.tol_spec},
                     {"tol_degen", tols.tol_degen}};
  j["version"] = kVersion;
  write_file(j, path);
}

Witness load_witness(const std::filesystem::path& path,
                     WitnessTolerances* tols_out) {
  const Json j = parse_file(path);
  if (!j.is_object()) throw ParseError(path.string() + ": expected an object");
  if (!j.contains("unitaries") || !j["unitaries"].is_array())
    throw ParseError(path.string() + ": \"unitaries\" must be an array");

  Witness w;
  for (std::size_t n = 0; n < j["unitaries"].size(); ++n) {
    const auto& u = j["unitaries"][n];
    const std::string where =
        path.string() + ": unitaries[" + std::to_string(n) + "]";
    if (!u.is_array()) throw ParseError(where + ": expected an array");
    // Entries are a flattened row-major square matrix.
    std::size_t dim = 0;
    while (dim * dim < u.size()) ++dim;
    if (dim * dim != u.size() || dim == 0)
      throw ParseError(where + ": entry count is not a positive square");
    ComplexMatrix m(dim, dim);
    for (std::size_t e = 0; e < u.size(); ++e)
      m(e / dim, e % dim) =
          complex_entry(u[e], where + "[" + std::to_string(e) + "]");
    try {
      w.unitaries.emplace_back(std::move(m));
    } catch (const PreconditionViolated& e) {
      throw ParseError(where + ": " + e.what());
    }
  }

  if (!j.contains("residual"))
    throw ParseError(path.string() + ": missing \"residual\"");
  w.residual = finite_number(j["residual"], path.string() + ": residual");

  if (tols_out) {
    *tols_out = WitnessTolerances{};
    if (j.contains("tolerances")) {
      const auto& t = j["tolerances"];
      if (!t.is_object())
        throw ParseError(path.string() + ": \"tolerances\" must be an object");
      if (t.contains("tol_equiv"))
        tols_out->tol_equiv =
            finite_number(t["tol_equiv"], path.string() + ": tol_equiv");
      if (t.contains("tol_spec"))
        tols_out->tol_spec =
            finite_number(t["tol_spec"], path.string() + ": tol_spec");
      if (t.contains("tol_degen"))
        tols_out->tol_degen =
            finite_number(t["tol_degen"], path.string() + ": tol_degen");
    }
  }
  return w;
}

}  // namespace lucanon
