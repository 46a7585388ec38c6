#include "hnewton/seeding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hnewton {

namespace {

cplx coeff(const std::map<int, cplx>& m, int k) {
  const auto it = m.find(k);
  return it == m.end() ? cplx(0.0) : it->second;
}

// the n solutions of w^n = rhs, ordered by ascending principal argument
std::vector<cplx> nth_roots(cplx rhs, int n) {
  const double rho = std::pow(std::abs(rhs), 1.0 / n);
  const double psi = std::arg(rhs);
  std::vector<cplx> roots;
  roots.reserve(n);
  for (int k = 0; k < n; ++k)
    roots.push_back(std::polar(rho, (psi + 2.0 * pi * k) / n));
  std::sort(roots.begin(), roots.end(),
            [](cplx u, cplx v) { return std::arg(u) < std::arg(v); });
  return roots;
}

}  // namespace

cplx solve_linear_harmonic(cplx a, cplx b, cplx c) {
  const double ma = std::abs(a), mb = std::abs(b);
  if (std::abs(ma - mb) <= 1e-14 * std::max(ma, mb) || (ma == 0.0 && mb == 0.0))
    throw NoUniqueSolution("solve_linear_harmonic: |a| = |b|");
  return (std::conj(a) * c - std::conj(b * c)) / (std::norm(a) - std::norm(b));
}

std::vector<cplx> pole_seeds(const LaurentData& data) {
  if (data.n < 1) throw std::invalid_argument("pole_seeds: n must be >= 1");
  const cplx an = coeff(data.a, -data.n);
  const cplx bn = coeff(data.b, -data.n);
  const double ma = std::abs(an), mb = std::abs(bn);
  if (ma == 0.0 && mb == 0.0)
    throw std::invalid_argument("pole_seeds: a_{-n} and b_{-n} both zero");
  if (std::abs(ma - mb) <= 1e-14 * std::max(ma, mb))
    throw NoUniqueSolution("pole_seeds: |a_{-n}| = |b_{-n}|");

  const cplx c = -(coeff(data.a, 0) + std::conj(coeff(data.b, 0)));
  if (c == cplx(0.0))
    throw DegenerateConstant("pole_seeds: c = -(a_0 + conj(b_0)) vanishes");

  const cplx denom = std::conj(an) * c - std::conj(bn) * std::conj(c);
  if (denom == cplx(0.0))
    throw NoUniqueSolution("pole_seeds: denominator vanishes");
  const cplx rhs = (std::norm(an) - std::norm(bn)) / denom;

  std::vector<cplx> seeds = nth_roots(rhs, data.n);
  for (auto& s : seeds) s += data.center;
  return seeds;
}

std::vector<cplx> infinity_seeds(const std::map<int, cplx>& a,
                                 const std::map<int, cplx>& b, int n) {
  if (n < 1) throw std::invalid_argument("infinity_seeds: n must be >= 1");
  const cplx an = coeff(a, n);
  const cplx bn = coeff(b, n);
  const double ma = std::abs(an), mb = std::abs(bn);
  if (ma == 0.0 && mb == 0.0)
    throw std::invalid_argument("infinity_seeds: a_n and b_n both zero");
  if (std::abs(ma - mb) <= 1e-14 * std::max(ma, mb))
    throw NoUniqueSolution("infinity_seeds: |a_n| = |b_n|");

  const cplx c = -(coeff(a, 0) + std::conj(coeff(b, 0)));
  if (c == cplx(0.0))
    throw DegenerateConstant("infinity_seeds: c = -(a_0 + conj(b_0)) vanishes");

  const cplx rhs =
      (std::conj(an) * c - std::conj(bn) * std::conj(c)) / (std::norm(an) - std::norm(bn));
  return nth_roots(rhs, n);
}

NormalFormData normal_form(const std::map<int, cplx>& a,
                           const std::map<int, cplx>& b, cplx z0, int K) {
  if (K < 2) throw std::invalid_argument("normal_form: K must be >= 2");
  const cplx a1 = coeff(a, 1);
  const cplx b1 = coeff(b, 1);
  if (a1 == cplx(0.0)) throw NotSingularZero("normal_form: a_1 = 0");
  const double ma = std::abs(a1), mb = std::abs(b1);
  if (std::abs(ma - mb) > 1e-10 * std::max(ma, mb))
    throw NotSingularZero("normal_form: |a_1| != |b_1|, zero is not singular");
  const cplx constant = coeff(a, 0) + std::conj(coeff(b, 0));
  if (std::abs(constant) > 1e-8 * (std::abs(coeff(a, 0)) + std::abs(coeff(b, 0)) + ma))
    throw NotSingularZero("normal_form: a_0 + conj(b_0) != 0, not a zero of f");

  // conj(b_1) = a_1 e^{2 i theta}, theta in [0, pi)
  double theta = 0.5 * std::arg(std::conj(b1) / a1);
  if (theta < 0.0) theta += pi;

  NormalFormData nf;
  nf.z0 = z0;
  nf.theta = theta;
  nf.scale = std::conj(b1) * std::polar(1.0, -theta);
  for (int k = 2; k <= K; ++k) {
    const cplx rot = std::polar(1.0, (k - 1) * theta);
    nf.alpha[k] = coeff(a, k) / a1 * rot;
    nf.beta[k] = coeff(b, k) / b1 * rot;
  }
  nf.c_tilde = -(nf.alpha[2] + std::conj(nf.beta[2]));
  return nf;
}

std::vector<cplx> singular_seeds(const NormalFormData& nf, double delta) {
  const cplx ct = nf.c_tilde;
  if (ct == cplx(0.0))
    throw NotSingularZero("singular_seeds: c_tilde = 0 (degenerate)");
  const cplx rot = std::polar(1.0, nf.theta);

  if (std::abs(ct.imag()) > 1e-12 * std::abs(ct)) {
    // two zeros split off along the +-i e^{i theta} directions
    if (!(delta > 0.0))
      throw NotSingularZero("singular_seeds: Im(c_tilde) != 0 needs delta > 0");
    const cplx off = cplx(0.0, 1.0) * std::sqrt(delta) * rot;
    return {nf.z0 + off, nf.z0 - off};
  }

  // real c_tilde: one zero moves along e^{i theta}; cusps are rejected
  const double a2 = std::abs(nf.alpha.count(2) ? nf.alpha.at(2) : cplx(0.0));
  const double b2 = std::abs(nf.beta.count(2) ? nf.beta.at(2) : cplx(0.0));
  if (std::abs(a2 - b2) <= 1e-10 * std::max(a2, b2))
    throw NotSingularZero(
        "singular_seeds: |alpha_2| = |beta_2| with real c_tilde (cusp)");
  if (delta == 0.0)
    throw NotSingularZero("singular_seeds: delta = 0 gives no displaced zero");
  const cplx ct_real = cplx(ct.real(), 0.0);
  const cplx z3 =
      (1.0 - std::sqrt(1.0 - delta * ct_real * ct_real)) / ct_real * rot;
  return {nf.z0 + z3};
}

}  // namespace hnewton
