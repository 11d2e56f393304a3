#pragma once

// Deterministic text rendering shared by the CLI and tests.  All numeric
// output funnels through fmt_g12 so byte-identical runs are a matter of
// construction, not luck.

#include <string>
#include <vector>

#include "lucanon/symmetry.hpp"

namespace lucanon {

// Twelve significant digits, shortest form ("%.12g"): 1/sqrt(2) renders as
// "0.707106781187", exact values stay short ("0.8").
std::string fmt_g12(double x);

// One-based block ranges: {1},{2},{3-4}; zero blocks annotated {5-6:zero}.
std::string format_partition(const ModePartition& p);

// "mode <k>: sigma <v1> <v2> ... partition {..},{..}" (k is 1-based).
std::string format_mode_line(std::size_t mode_zero_based,
                             const std::vector<double>& sigma,
                             const ModePartition& p);

}  // namespace lucanon
