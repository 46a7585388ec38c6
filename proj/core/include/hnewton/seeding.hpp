#pragma once

#include <map>
#include <vector>

#include "hnewton/types.hpp"

namespace hnewton {

// truncated local expansions h(z) = sum_k a_k (z - center)^k and likewise
// b_k for g, around a pole of order n >= 1.  missing keys are treated as
// zero coefficients.
struct LaurentData {
  cplx center{};
  int n = 1;
  std::map<int, cplx> a;
  std::map<int, cplx> b;
};

// the unique solution of a*z + conj(b*z) = c when |a| != |b|:
//   z = (conj(a)*c - conj(b*c)) / (|a|^2 - |b|^2)
// throws NoUniqueSolution when |a| = |b| to relative 1e-14
cplx solve_linear_harmonic(cplx a, cplx b, cplx c);

// n seeds near a pole of order n: center plus the n-th roots of
//   (|a_{-n}|^2 - |b_{-n}|^2) / (conj(a_{-n})*c - conj(b_{-n})*conj(c)),
// c = -(a_0 + conj(b_0)); roots ordered by ascending principal argument
std::vector<cplx> pole_seeds(const LaurentData& data);

// n seeds “close to infinity”: the n solutions of
//   z^n = (conj(a_n)*c - conj(b_n)*conj(c)) / (|a_n|^2 - |b_n|^2)
// with a, b the expansion coefficients of h and g at infinity
std::vector<cplx> infinity_seeds(const std::map<int, cplx>& a,
                                 const std::map<int, cplx>& b, int n);

// local normal form at a singular zero z0 where |a_1| = |b_1| != 0:
// f(z) = scale * ftilde(e^{-i theta} (z - z0)) with
// ftilde(zeta) = zeta + conj(zeta) + sum_{k>=2} alpha_k zeta^k + conj(beta_k zeta^k)
struct NormalFormData {
  cplx z0{};
  double theta = 0.0;            // in [0, pi)
  std::map<int, cplx> alpha;     // k >= 2
  std::map<int, cplx> beta;      // k >= 2
  cplx scale{};                  // conj(b_1) e^{-i theta}
  cplx c_tilde{};                // -(alpha_2 + conj(beta_2))
};

NormalFormData normal_form(const std::map<int, cplx>& a,
                           const std::map<int, cplx>& b, cplx z0, int K = 6);

// seeds for the two zeros of f - delta*c that split off the singular zero:
// Im(c_tilde) != 0 (delta > 0 required) gives the pair
//   z0 +- i sqrt(delta) e^{i theta},
// Im(c_tilde) = 0 with |alpha_2| != |beta_2| (delta != 0) gives the single
//   z0 + ((1 - sqrt(1 - delta c_tilde^2)) / c_tilde) e^{i theta}
std::vector<cplx> singular_seeds(const NormalFormData& nf, double delta);

}  // namespace hnewton
