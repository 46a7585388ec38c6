#pragma once

#include <utility>

#include "hnewton/harmonic_map.hpp"

namespace hnewton {

struct KantorovichCertificate {
  double alpha = 0.0;          // |f(z0)| / ||h'(z0)| - |g'(z0)||
  double omega0 = 0.0;         // (sup|h''| + sup|g''|) / ||h'(z0)| - |g'(z0)||
  double h0 = 0.0;             // alpha * omega0
  double rho = 0.0;            // (1 - sqrt(1 - 2 h0)) / omega0; NaN when h0 > 1/2
  bool certified = false;      // h0 <= 1/2 and the ball B(z0, rho) fits the domain
  double domain_radius = 0.0;
  bool empirical = false;      // sup bounds were sampled on a grid, not proven
};

// Newton-Kantorovich certificate at z0 over the disk B(z0, domain_radius).
// sup_ddh / sup_ddg are upper bounds for |h''| and |g''| on that disk; pass
// analytically derived values, or the result of sup_second_derivatives with
// empirical = true.  throws NumericalError when |h'(z0)| = |g'(z0)|.
KantorovichCertificate kantorovich(const HarmonicMap& map, cplx z0,
                                   double domain_radius, double sup_ddh,
                                   double sup_ddg, bool empirical = false);

// grid estimates (max over samples) of sup |h''| and sup |g''| on the closed
// disk B(center, radius): grid_n radii times grid_n angles.  requires
// eval_ddh / eval_ddg; throws std::invalid_argument if they are missing.
std::pair<double, double> sup_second_derivatives(const HarmonicMap& map,
                                                 cplx center, double radius,
                                                 int grid_n = 64);

// Mysovskii-style certified disk around a computed zero z_star: sweeps
// r_steps radii up to r_max, estimates the affine-covariant Lipschitz
// constant omega on each disk from sampled point pairs, and returns the
// best (radius, omega) with radius = min(r, 2/omega) maximized.  radii
// whose sample set hits J_f = 0 are skipped.
std::pair<double, double> mysovskii_disk(const HarmonicMap& map, cplx z_star,
                                         double r_max, int grid_n = 12,
                                         int r_steps = 20);

}  // namespace hnewton
