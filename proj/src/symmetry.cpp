#include "lucanon/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lucanon {

ModePartition degeneracy_partition(const std::vector<double>& values,
                                   double tol_degen, double tol_zero) {
  ModePartition part;
  if (values.empty()) return part;

  // Descending check; deviations within tol_zero are tolerated as sign noise
  // around zero, anything larger is a caller error.
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    if (values[i + 1] > values[i] + tol_zero)
      throw NotSorted("values must be descending: v[" + std::to_string(i + 1) +
                      "] > v[" + std::to_string(i) + "]");

  const double scale = std::max(values[0], 1e-300);
  const double gap_tol = tol_degen * scale;
  const double near_tol = 10.0 * gap_tol;

  const std::size_t n = values.size();
  std::size_t begin = 0;
  double sum = 0.0;
  bool zero_block = values[0] <= tol_zero;
  for (std::size_t i = 0; i < n; ++i) {
    const bool is_zero = values[i] <= tol_zero;
    bool split = false;
    if (i > begin) {
      if (zero_block) {
        split = false;  // the zero block swallows everything after it
      } else if (is_zero) {
        split = true;   // entering the (single, trailing) zero block
      } else {
        // Greedy chaining: compare against the most recent member, so runs of
        // pairwise-close values merge even if the run's total spread exceeds
        // the tolerance.
        const double gap = values[i - 1] - values[i];
        split = gap > gap_tol;
        if (split && gap <= near_tol) part.near_degenerate = true;
      }
    }
    if (split) {
      part.blocks.push_back(
          {begin, i, sum / static_cast<double>(i - begin), zero_block});
      begin = i;
      sum = 0.0;
      zero_block = is_zero;
    }
    sum += values[i];
  }
  part.blocks.push_back(
      {begin, n, sum / static_cast<double>(n - begin), zero_block});
  return part;
}

SymmetryStructure symmetry_structure(
    const std::vector<std::vector<double>>& spectra, double tol_degen,
    double tol_zero) {
  SymmetryStructure s;
  s.modes.reserve(spectra.size());
  for (const auto& sigma : spectra)
    s.modes.push_back(degeneracy_partition(sigma, tol_degen, tol_zero));
  return s;
}

bool structures_compatible(const SymmetryStructure& a,
                           const SymmetryStructure& b, double tol_spec) {
  if (a.modes.size() != b.modes.size())
    throw DimensionMismatch("structures cover different mode counts");
  for (std::size_t n = 0; n < a.modes.size(); ++n) {
    const auto& pa = a.modes[n].blocks;
    const auto& pb = b.modes[n].blocks;
    const std::size_t la = pa.empty() ? 0 : pa.back().end;
    const std::size_t lb = pb.empty() ? 0 : pb.back().end;
    if (la != lb)
      throw DimensionMismatch("structures cover different dimensions at mode " +
                              std::to_string(n));
    if (pa.size() != pb.size()) return false;
    for (std::size_t k = 0; k < pa.size(); ++k) {
      if (pa[k].begin != pb[k].begin || pa[k].end != pb[k].end) return false;
      if (std::abs(pa[k].value - pb[k].value) > tol_spec) return false;
    }
  }
  return true;
}

}  // namespace lucanon
