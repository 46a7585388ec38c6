#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hnewton/polynomial.hpp"
#include "hnewton/types.hpp"

namespace hnewton {

using evaluator = std::function<cplx(cplx)>;

// a planar harmonic mapping f = h + conj(g), h and g analytic.
// eval_dz returns h'(z) and eval_dzbar returns conj(g'(z)), i.e. the two
// Wirtinger derivatives of f.  eval_ddh / eval_ddg are only needed by the
// certification routines, eval_h / eval_g only by Laurent-based seeding;
// they may be left empty otherwise.
struct HarmonicMap {
  evaluator eval_f;
  evaluator eval_dz;
  evaluator eval_dzbar;
  evaluator eval_ddh;
  evaluator eval_ddg;
  evaluator eval_h;
  evaluator eval_g;
  std::string name;
  // advisory metadata: (location, order) of known poles, used by the CLI
  // for seeding and plot overlays
  std::vector<std::pair<cplx, int>> poles;
};

// J_f(z) = |h'(z)|^2 - |g'(z)|^2
double jacobian(const HarmonicMap& map, cplx z);

enum class Orientation { SensePreserving, SenseReversing, Singular };

const char* to_string(Orientation o);

// Singular when |J_f| <= eps_singular * (|h'|^2 + |g'|^2)
Orientation classify_orientation(const HarmonicMap& map, cplx z,
                                 double eps_singular = 1e-12);

// f = p_h/q_h + conj(p_g/q_g) with polynomial numerators and denominators;
// derivatives come from the quotient rule so no finite differencing anywhere
struct RationalPair {
  poly h_num{cplx(0.0)};
  poly h_den{cplx(1.0)};
  poly g_num{cplx(0.0)};
  poly g_den{cplx(1.0)};
};

HarmonicMap make_rational_pair(const RationalPair& spec,
                               std::string name = "rational_pair");

// named examples; poles metadata is filled in where known
HarmonicMap make_mpw(int n, double r);
HarmonicMap make_rhie(int n, double r, double eps);
HarmonicMap make_wilmshurst(int n);
HarmonicMap make_tan_conj();
HarmonicMap make_einstein();
HarmonicMap make_isothermal(double k, cplx w);

// f(z) + constant; keeps derivatives and metadata of the base map
HarmonicMap make_shifted(HarmonicMap base, cplx constant);

}  // namespace hnewton
