#include "hnewton/newton.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hnewton/parallel.hpp"

namespace hnewton {

const char* to_string(IterationStatus s) {
  switch (s) {
    case IterationStatus::ConvergedResidual: return "converged-residual";
    case IterationStatus::ConvergedStep: return "converged-step";
    case IterationStatus::MaxIterations: return "max-iterations";
    case IterationStatus::Diverged: return "diverged";
    case IterationStatus::SingularJacobian: return "singular-jacobian";
  }
  return "?";
}

LinsysMode linsys_mode_from_string(const std::string& s) {
  if (s == "never") return LinsysMode::Never;
  if (s == "always") return LinsysMode::Always;
  if (s == "auto") return LinsysMode::Auto;
  throw std::invalid_argument("linsys mode must be never|always|auto, got '" +
                              s + "'");
}

cplx step_general(cplx dz_f, cplx dzbar_f, cplx fz, cplx z) {
  const double jac = std::norm(dz_f) - std::norm(dzbar_f);
  return z - (std::conj(dz_f) * fz - dzbar_f * std::conj(fz)) / jac;
}

cplx step_harmonic(const HarmonicMap& map, cplx z) {
  return step_general(map.eval_dz(z), map.eval_dzbar(z), map.eval_f(z), z);
}

namespace {

// F'(x) delta = -F(x) written over R^2:
//   [ re(dz)+re(dzb)   -im(dz)+im(dzb) ] [dx]   [-re f]
//   [ im(dz)+im(dzb)    re(dz)-re(dzb) ] [dy] = [-im f]
// partial pivoting; pivot below 1e-300 reports failure
bool solve_2x2(cplx dz_f, cplx dzbar_f, cplx fz, double& dx, double& dy) {
  double m00 = dz_f.real() + dzbar_f.real();
  double m01 = -dz_f.imag() + dzbar_f.imag();
  double m10 = dz_f.imag() + dzbar_f.imag();
  double m11 = dz_f.real() - dzbar_f.real();
  double r0 = -fz.real();
  double r1 = -fz.imag();
  if (std::abs(m10) > std::abs(m00)) {
    std::swap(m00, m10);
    std::swap(m01, m11);
    std::swap(r0, r1);
  }
  if (std::abs(m00) < 1e-300) return false;
  const double l = m10 / m00;
  const double u11 = m11 - l * m01;
  const double s1 = r1 - l * r0;
  if (std::abs(u11) < 1e-300) return false;
  dy = s1 / u11;
  dx = (r0 - m01 * dy) / m00;
  return true;
}

}  // namespace

cplx step_linsys(const HarmonicMap& map, cplx z) {
  double dx, dy;
  if (!solve_2x2(map.eval_dz(z), map.eval_dzbar(z), map.eval_f(z), dx, dy))
    throw SingularJacobianError("step_linsys: pivot breakdown at z = (" +
                                std::to_string(z.real()) + ", " +
                                std::to_string(z.imag()) + ")");
  return z + cplx(dx, dy);
}

IterationOutcome iterate(const HarmonicMap& map, cplx z0,
                         const StoppingConfig& cfg) {
  IterationOutcome out;
  out.final = z0;

  cplx fz = map.eval_f(z0);
  if (!is_finite(fz)) {
    out.status = IterationStatus::Diverged;
    out.residual = std::numeric_limits<double>::infinity();
    return out;
  }
  out.residual = std::abs(fz);
  if (out.residual < cfg.restol) {
    out.status = IterationStatus::ConvergedResidual;
    return out;
  }

  cplx z = z0;
  for (int k = 1; k <= cfg.maxit; ++k) {
    const cplx dzv = map.eval_dz(z);
    const cplx dzbv = map.eval_dzbar(z);

    bool use_linsys = cfg.use_linsys == LinsysMode::Always;
    if (cfg.use_linsys == LinsysMode::Auto) {
      const double scale = std::norm(dzv) + std::norm(dzbv);
      use_linsys = std::abs(std::norm(dzv) - std::norm(dzbv)) <
                   cfg.auto_threshold * scale;
    }

    cplx znew;
    if (use_linsys) {
      double dx, dy;
      if (!solve_2x2(dzv, dzbv, fz, dx, dy)) {
        out.final = z;
        out.status = IterationStatus::SingularJacobian;
        out.iterations = k - 1;
        out.residual = std::abs(fz);
        return out;
      }
      znew = z + cplx(dx, dy);
    } else {
      znew = step_general(dzv, dzbv, fz, z);
    }

    const cplx fnew = is_finite(znew) ? map.eval_f(znew)
                                      : cplx(std::numeric_limits<double>::quiet_NaN(),
                                             std::numeric_limits<double>::quiet_NaN());
    out.final = znew;
    out.iterations = k;
    if (!is_finite(znew) || !is_finite(fnew)) {
      out.status = IterationStatus::Diverged;
      out.residual = std::numeric_limits<double>::infinity();
      return out;
    }
    out.residual = std::abs(fnew);
    if (out.residual < cfg.restol) {
      out.status = IterationStatus::ConvergedResidual;
      return out;
    }
    if (std::abs(znew - z) < cfg.steptol * std::abs(znew)) {
      out.status = IterationStatus::ConvergedStep;
      return out;
    }
    z = znew;
    fz = fnew;
  }
  out.status = IterationStatus::MaxIterations;
  return out;
}

std::vector<IterationOutcome> iterate_batch(const HarmonicMap& map,
                                            const std::vector<cplx>& points,
                                            const StoppingConfig& cfg) {
  std::vector<IterationOutcome> out(points.size());
  parallel_for(points.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = iterate(map, points[i], cfg);
  });
  return out;
}

}  // namespace hnewton
