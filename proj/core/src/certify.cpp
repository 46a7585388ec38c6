#include "hnewton/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace hnewton {

KantorovichCertificate kantorovich(const HarmonicMap& map, cplx z0,
                                   double domain_radius, double sup_ddh,
                                   double sup_ddg, bool empirical) {
  if (!(domain_radius > 0.0))
    throw std::invalid_argument("kantorovich: domain_radius must be > 0");
  const double denom =
      std::abs(std::abs(map.eval_dz(z0)) - std::abs(map.eval_dzbar(z0)));
  if (denom == 0.0)
    throw NumericalError("kantorovich: |h'(z0)| = |g'(z0)|, J_f(z0) = 0");

  KantorovichCertificate cert;
  cert.domain_radius = domain_radius;
  cert.empirical = empirical;
  cert.alpha = std::abs(map.eval_f(z0)) / denom;
  cert.omega0 = (sup_ddh + sup_ddg) / denom;
  cert.h0 = cert.alpha * cert.omega0;
  if (cert.h0 <= 0.5) {
    cert.rho = cert.omega0 > 0.0
                   ? (1.0 - std::sqrt(1.0 - 2.0 * cert.h0)) / cert.omega0
                   : cert.alpha;
    // the certified ball must stay inside the disk the sup bounds cover
    cert.certified = cert.rho <= domain_radius;
  } else {
    cert.rho = std::numeric_limits<double>::quiet_NaN();
    cert.certified = false;
  }
  return cert;
}

std::pair<double, double> sup_second_derivatives(const HarmonicMap& map,
                                                 cplx center, double radius,
                                                 int grid_n) {
  if (!map.eval_ddh || !map.eval_ddg)
    throw std::invalid_argument(
        "sup_second_derivatives: second-derivative evaluators missing");
  if (grid_n < 1) throw std::invalid_argument("sup_second_derivatives: grid_n < 1");
  double sh = std::abs(map.eval_ddh(center));
  double sg = std::abs(map.eval_ddg(center));
  for (int i = 1; i <= grid_n; ++i) {
    const double r = radius * double(i) / grid_n;
    for (int j = 0; j < grid_n; ++j) {
      const cplx z = center + std::polar(r, 2.0 * pi * j / grid_n);
      sh = std::max(sh, std::abs(map.eval_ddh(z)));
      sg = std::max(sg, std::abs(map.eval_ddg(z)));
    }
  }
  return {sh, sg};
}

namespace {

struct Deriv {
  cplx dz, dzbar;
  double jac;
};

}  // namespace

std::pair<double, double> mysovskii_disk(const HarmonicMap& map, cplx z_star,
                                         double r_max, int grid_n,
                                         int r_steps) {
  if (!(r_max > 0.0)) throw std::invalid_argument("mysovskii_disk: r_max <= 0");
  if (grid_n < 2 || r_steps < 1)
    throw std::invalid_argument("mysovskii_disk: grid_n or r_steps too small");

  const std::size_t pair_cap = 10000;
  double best_radius = 0.0;
  double best_omega = std::numeric_limits<double>::infinity();

  for (int s = 0; s < r_steps; ++s) {
    // log-spaced radii r_max * 10^{-2} .. r_max
    const double expo = r_steps == 1 ? 0.0 : -2.0 + 2.0 * s / (r_steps - 1);
    const double r = r_max * std::pow(10.0, expo);

    std::vector<cplx> pts;
    pts.reserve(std::size_t(grid_n) * grid_n + 1);
    pts.push_back(z_star);
    for (int i = 1; i <= grid_n; ++i)
      for (int j = 0; j < grid_n; ++j)
        pts.push_back(z_star + std::polar(r * double(i) / grid_n,
                                          2.0 * pi * j / grid_n));

    std::vector<Deriv> d(pts.size());
    bool singular_sample = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      d[i].dz = map.eval_dz(pts[i]);
      d[i].dzbar = map.eval_dzbar(pts[i]);
      d[i].jac = std::norm(d[i].dz) - std::norm(d[i].dzbar);
      if (!is_finite(d[i].dz) || !is_finite(d[i].dzbar) || d[i].jac == 0.0) {
        singular_sample = true;
        break;
      }
    }
    if (singular_sample) continue;  // this radius is not certifiable

    const std::size_t n = pts.size();
    const std::size_t total = n * (n - 1);
    double omega = 0.0;
    auto visit = [&](std::size_t i, std::size_t j) {
      // omega >= |F'(x)^{-1} (F'(y) - F'(x)) (y - x)| / |y - x|^2
      const cplx dxy = pts[j] - pts[i];
      const cplx w = (d[j].dz - d[i].dz) * dxy +
                     (d[j].dzbar - d[i].dzbar) * std::conj(dxy);
      const cplx applied =
          (std::conj(d[i].dz) * w - d[i].dzbar * std::conj(w)) / d[i].jac;
      omega = std::max(omega, std::abs(applied) / std::norm(dxy));
    };
    if (total <= pair_cap) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) visit(i, j);
    } else {
      std::mt19937 rng(2024u);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t t = 0; t < pair_cap; ++t) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i != j) visit(i, j);
      }
    }

    const double certified = omega > 0.0 ? std::min(r, 2.0 / omega) : r;
    if (certified > best_radius) {
      best_radius = certified;
      best_omega = omega;
    }
  }
  return {best_radius, best_omega};
}

}  // namespace hnewton
