#include "hnewton/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hnewton {

namespace {

int axis_count(double lo, double hi, double mesh) {
  // the small slack keeps 16/0.2 from flooring to 79
  return int(std::floor((hi - lo) / mesh + 1e-9)) + 1;
}

void validate(const GridSpec& spec) {
  if (!(spec.x_min < spec.x_max) || !(spec.y_min < spec.y_max))
    throw std::invalid_argument("grid: window must have positive extent");
  if (!(spec.mesh > 0.0)) throw std::invalid_argument("grid: mesh must be > 0");
}

}  // namespace

int GridSpec::nx() const { return axis_count(x_min, x_max, mesh); }
int GridSpec::ny() const { return axis_count(y_min, y_max, mesh); }

std::vector<cplx> make_grid(const GridSpec& spec) {
  validate(spec);
  const int nx = spec.nx(), ny = spec.ny();
  std::vector<cplx> pts;
  pts.reserve(std::size_t(nx) * ny);
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix)
      pts.emplace_back(spec.x_min + spec.mesh * ix, spec.y_min + spec.mesh * iy);
  return pts;
}

namespace {

struct Converged {
  cplx z;
  double residual;
};

// single-linkage clustering: points sorted by re, then a window scan merges
// any pair within dedup_tol through a union-find
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(int i, int j) {
    i = find(i);
    j = find(j);
    if (i != j) parent[std::max(i, j)] = std::min(i, j);
  }
};

}  // namespace

std::vector<ZeroRecord> find_zeros(const HarmonicMap& map, const GridSpec& spec,
                                   const StoppingConfig& cfg, double dedup_tol) {
  const std::vector<cplx> grid = make_grid(spec);
  const std::vector<IterationOutcome> outcomes = iterate_batch(map, grid, cfg);

  std::vector<Converged> pts;
  for (const auto& o : outcomes) {
    const bool converged = o.status == IterationStatus::ConvergedResidual ||
                           o.status == IterationStatus::ConvergedStep;
    if (converged && o.residual < cfg.restol && is_finite(o.final))
      pts.push_back({o.final, o.residual});
  }
  if (pts.empty()) return {};

  std::sort(pts.begin(), pts.end(), [](const Converged& a, const Converged& b) {
    if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
    return a.z.imag() < b.z.imag();
  });

  UnionFind uf(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[j].z.real() - pts[i].z.real() > dedup_tol) break;
      if (std::abs(pts[j].z - pts[i].z) <= dedup_tol) uf.unite(int(i), int(j));
    }
  }

  std::vector<int> rep(pts.size(), -1);  // root index -> best member
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const int root = uf.find(int(i));
    if (rep[root] < 0 || pts[i].residual < pts[rep[root]].residual)
      rep[root] = int(i);
  }

  std::vector<ZeroRecord> records;
  for (std::size_t root = 0; root < pts.size(); ++root) {
    if (rep[root] < 0) continue;
    ZeroRecord rec;
    rec.location = pts[rep[root]].z;
    rec.residual = pts[rep[root]].residual;
    rec.jacobian = jacobian(map, rec.location);
    rec.orientation = classify_orientation(map, rec.location);
    rec.members = 0;
    records.push_back(rec);
  }
  // recount members against the final root set
  {
    std::vector<int> roots;
    for (std::size_t root = 0; root < pts.size(); ++root)
      if (rep[root] >= 0) roots.push_back(int(root));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const int root = uf.find(int(i));
      const auto it = std::lower_bound(roots.begin(), roots.end(), root);
      records[std::size_t(it - roots.begin())].members += 1;
    }
  }

  std::sort(records.begin(), records.end(),
            [](const ZeroRecord& a, const ZeroRecord& b) {
              if (a.location.real() != b.location.real())
                return a.location.real() < b.location.real();
              return a.location.imag() < b.location.imag();
            });
  return records;
}

bool nonisolated_suspected(const std::vector<ZeroRecord>& zeros) {
  if (zeros.size() <= 50) return false;
  return std::all_of(zeros.begin(), zeros.end(), [](const ZeroRecord& r) {
    return std::abs(r.jacobian) < 1e-8;
  });
}

BasinLabeling label_basins(const HarmonicMap& map, const GridSpec& spec,
                           const StoppingConfig& cfg,
                           const std::vector<ZeroRecord>& zeros,
                           double match_tol) {
  const std::vector<cplx> grid = make_grid(spec);
  const std::vector<IterationOutcome> outcomes = iterate_batch(map, grid, cfg);

  BasinLabeling lab;
  lab.spec = spec;
  lab.zeros = zeros;
  lab.labels.assign(grid.size(), -1);
  lab.iteration_counts.assign(grid.size(), 0);

  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& o = outcomes[i];
    lab.iteration_counts[i] = o.iterations;
    const bool converged = o.status == IterationStatus::ConvergedResidual ||
                           o.status == IterationStatus::ConvergedStep;
    if (!converged || !is_finite(o.final)) continue;
    int best = -1;
    double best_dist = match_tol;
    for (std::size_t k = 0; k < zeros.size(); ++k) {
      const double dist = std::abs(o.final - zeros[k].location);
      if (dist <= best_dist) {
        best_dist = dist;
        best = int(k);
      }
    }
    lab.labels[i] = best;
  }
  return lab;
}

std::string zero_records_csv(const std::vector<ZeroRecord>& zeros) {
  std::ostringstream out;
  out.precision(17);
  out << "re,im,residual,jacobian,orientation,members\n";
  for (const auto& z : zeros) {
    out << z.location.real() << ',' << z.location.imag() << ',' << z.residual
        << ',' << z.jacobian << ',' << to_string(z.orientation) << ','
        << z.members << '\n';
  }
  return out.str();
}

std::string zero_records_json(const std::vector<ZeroRecord>& zeros) {
  std::ostringstream out;
  out.precision(17);
  out << "[";
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    const auto& z = zeros[i];
    out << (i ? ",\n " : "\n ") << "{\"re\": " << z.location.real()
        << ", \"im\": " << z.location.imag() << ", \"residual\": " << z.residual
        << ", \"jacobian\": " << z.jacobian << ", \"orientation\": \""
        << to_string(z.orientation) << "\", \"members\": " << z.members << "}";
  }
  out << "\n]\n";
  return out.str();
}

}  // namespace hnewton
