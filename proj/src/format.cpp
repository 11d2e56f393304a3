#include "lucanon/format.hpp"

#include <cstdio>

namespace lucanon {

std::string fmt_g12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_partition(const ModePartition& p) {
  std::string out;
  for (const auto& b : p.blocks) {
    if (!out.empty()) out += ',';
    out += '{';
    out += std::to_string(b.begin + 1);
    if (b.size() > 1) out += '-' + std::to_string(b.end);
    if (b.zero) out += ":zero";
    out += '}';
  }
  return out;
}

std::string format_mode_line(std::size_t mode_zero_based,
                             const std::vector<double>& sigma,
                             const ModePartition& p) {
  std::string out = "mode " + std::to_string(mode_zero_based + 1) + ": sigma";
  for (double s : sigma) out += ' ' + fmt_g12(s);
  out += " partition " + format_partition(p);
  return out;
}

}  // namespace lucanon
