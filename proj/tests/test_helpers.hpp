#pragma once

// Shared constructors for the standard test states and small conveniences.

#include <cmath>
#include <cstdint>
#include <vector>

#include "lucanon/tensor.hpp"

namespace helpers {

using lucanon::Cx;
using lucanon::StateTensor;

inline StateTensor ghz() {
  std::vector<Cx> amps(8, Cx(0.0, 0.0));
  amps[0] = amps[7] = Cx(1.0 / std::sqrt(2.0), 0.0);
  return lucanon::new_state({2, 2, 2}, std::move(amps));
}

inline StateTensor w_state() {
  std::vector<Cx> amps(8, Cx(0.0, 0.0));
  amps[1] = amps[2] = amps[4] = Cx(1.0 / std::sqrt(3.0), 0.0);
  return lucanon::new_state({2, 2, 2}, std::move(amps));
}

// The 4x4 diagonal fixture diag(0.8, 0.4, sqrt(0.1), sqrt(0.1)).
inline StateTensor diag44(double alpha = 0.8, double beta = 0.4) {
  const double gamma = std::sqrt(0.1);
  std::vector<Cx> amps(16, Cx(0.0, 0.0));
  amps[0] = alpha;
  amps[5] = beta;
  amps[10] = amps[15] = gamma;
  return lucanon::new_state({4, 4}, std::move(amps));
}

inline double dist(const StateTensor& a, const StateTensor& b) {
  double s = 0.0;
  for (std::size_t e = 0; e < a.size(); ++e) s += std::norm(a[e] - b[e]);
  return std::sqrt(s);
}

}  // namespace helpers
