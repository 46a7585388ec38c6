#pragma once

#include <string>
#include <vector>

#include "hnewton/harmonic_map.hpp"

namespace hnewton {

enum class IterationStatus {
  ConvergedResidual,  // |f(z_k)| < restol
  ConvergedStep,      // |z_{k+1} - z_k| < steptol * |z_{k+1}|
  MaxIterations,
  Diverged,           // iterate or residual became non-finite
  SingularJacobian,   // pivot breakdown in the linear-system step
};

const char* to_string(IterationStatus s);

enum class LinsysMode { Never, Always, Auto };

LinsysMode linsys_mode_from_string(const std::string& s);

struct StoppingConfig {
  int maxit = 50;
  double restol = 1e-14;
  double steptol = 1e-14;
  LinsysMode use_linsys = LinsysMode::Never;
  // in Auto mode, switch to the linear-system step when
  // |J_f| < auto_threshold * (|h'|^2 + |g'|^2)
  double auto_threshold = 1e-12;
};

struct IterationOutcome {
  cplx final{};
  IterationStatus status = IterationStatus::MaxIterations;
  int iterations = 0;
  double residual = 0.0;
};

// one harmonic Newton step from precomputed values: the Wirtinger
// derivatives dz_f = h'(z), dzbar_f = conj(g'(z)) and fz = f(z).
// returns z - (conj(dz_f)*fz - dzbar_f*conj(fz)) / (|dz_f|^2 - |dzbar_f|^2)
cplx step_general(cplx dz_f, cplx dzbar_f, cplx fz, cplx z);

// evaluates the map once and applies step_general
cplx step_harmonic(const HarmonicMap& map, cplx z);

// the same step through the equivalent 2x2 real linear system with partial
// pivoting; throws SingularJacobianError when the pivot drops below 1e-300
cplx step_linsys(const HarmonicMap& map, cplx z);

// the damped-free harmonic Newton iteration with the stopping rules above
IterationOutcome iterate(const HarmonicMap& map, cplx z0,
                         const StoppingConfig& cfg = {});

// element-wise identical to calling iterate on each point; runs in parallel
// over points (HN_THREADS caps the worker count)
std::vector<IterationOutcome> iterate_batch(const HarmonicMap& map,
                                            const std::vector<cplx>& points,
                                            const StoppingConfig& cfg = {});

}  // namespace hnewton
