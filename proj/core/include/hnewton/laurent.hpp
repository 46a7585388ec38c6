#pragma once

#include <map>

#include "hnewton/harmonic_map.hpp"

namespace hnewton {

struct QuadratureConfig {
  cplx center{};
  double radius = 0.5;
  int nodes = 256;    // M equally spaced samples on the circle
  int k_min = -4;
  int k_max = 8;
};

// Laurent coefficients of an analytic function about cfg.center by the
// trapezoidal rule on |z - center| = radius:
//   c_k = (1/M) * sum_j func(center + R e^{2 pi i j / M}) R^{-k} e^{-2 pi i j k / M}
// summation in ascending j so results are deterministic.  a non-finite
// sample throws EvaluationError naming the node index.
std::map<int, cplx> laurent_coefficients(const evaluator& func,
                                         const QuadratureConfig& cfg);

}  // namespace hnewton
