#pragma once

#include <string>
#include <vector>

#include "hnewton/harmonic_map.hpp"
#include "hnewton/newton.hpp"

namespace hnewton {

struct GridSpec {
  double x_min = -2.0, x_max = 2.0;
  double y_min = -2.0, y_max = 2.0;
  double mesh = 0.05;

  int nx() const;
  int ny() const;
};

// row-major initial points: y outer, x inner, both ascending
std::vector<cplx> make_grid(const GridSpec& spec);

struct ZeroRecord {
  cplx location{};
  double residual = 0.0;
  double jacobian = 0.0;
  Orientation orientation = Orientation::Singular;
  int members = 0;  // grid points that converged into this cluster
};

// grid search: iterate_batch over make_grid(spec), keep converged points
// with residual < cfg.restol, single-linkage cluster with threshold
// dedup_tol, representative = smallest residual in the cluster.
// records are sorted by (re, im) of the location.
std::vector<ZeroRecord> find_zeros(const HarmonicMap& map, const GridSpec& spec,
                                   const StoppingConfig& cfg = {},
                                   double dedup_tol = 1e-8);

// continuum zero sets (an entire curve of zeros) fragment into many
// near-singular clusters; flag that situation instead of trusting the count
bool nonisolated_suspected(const std::vector<ZeroRecord>& zeros);

struct BasinLabeling {
  GridSpec spec;
  // row-major like make_grid; -1 = did not converge / no zero within match_tol
  std::vector<int> labels;
  std::vector<int> iteration_counts;
  std::vector<ZeroRecord> zeros;
};

BasinLabeling label_basins(const HarmonicMap& map, const GridSpec& spec,
                           const StoppingConfig& cfg,
                           const std::vector<ZeroRecord>& zeros,
                           double match_tol = 1e-6);

// columns: re, im, residual, jacobian, orientation, members
std::string zero_records_csv(const std::vector<ZeroRecord>& zeros);
std::string zero_records_json(const std::vector<ZeroRecord>& zeros);

}  // namespace hnewton
