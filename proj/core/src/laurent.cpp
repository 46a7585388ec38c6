#include "hnewton/laurent.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace hnewton {

std::map<int, cplx> laurent_coefficients(const evaluator& func,
                                         const QuadratureConfig& cfg) {
  if (!func) throw std::invalid_argument("laurent_coefficients: empty evaluator");
  if (!(cfg.radius > 0.0))
    throw std::invalid_argument("laurent_coefficients: radius must be > 0");
  if (cfg.nodes < 1)
    throw std::invalid_argument("laurent_coefficients: nodes must be >= 1");
  if (cfg.k_min > cfg.k_max)
    throw std::invalid_argument("laurent_coefficients: k_min > k_max");

  const int M = cfg.nodes;
  std::vector<cplx> samples(M);
  for (int j = 0; j < M; ++j) {
    const double phi = 2.0 * pi * j / M;
    const cplx node = cfg.center + std::polar(cfg.radius, phi);
    samples[j] = func(node);
    if (!is_finite(samples[j]))
      throw EvaluationError("laurent_coefficients: non-finite sample at node " +
                            std::to_string(j));
  }

  std::map<int, cplx> coeffs;
  for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
    const double rk = std::pow(cfg.radius, -k);
    cplx acc = 0.0;
    for (int j = 0; j < M; ++j) {
      const double phi = -2.0 * pi * double(j) * double(k) / M;
      acc += samples[j] * std::polar(rk, phi);
    }
    coeffs[k] = acc / double(M);
  }
  return coeffs;
}

}  // namespace hnewton
