#include "hnewton/harmonic_map.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace hnewton {

cplx polyval(const poly& p, cplx z) {
  // Horner, descending
  cplx acc = 0.0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * z + p[k];
  return acc;
}

poly polyder(const poly& p) {
  if (p.size() <= 1) return poly{cplx(0.0)};
  poly d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = double(k) * p[k];
  return d;
}

poly polyadd(const poly& p, const poly& q) {
  poly r(std::max(p.size(), q.size()), cplx(0.0));
  for (std::size_t k = 0; k < p.size(); ++k) r[k] += p[k];
  for (std::size_t k = 0; k < q.size(); ++k) r[k] += q[k];
  return r;
}

poly polymul(const poly& p, const poly& q) {
  poly r(p.size() + q.size() - 1, cplx(0.0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

poly polyscale(const poly& p, cplx s) {
  poly r = p;
  for (auto& c : r) c *= s;
  return r;
}

poly polytrim(poly p) {
  while (p.size() > 1 && p.back() == cplx(0.0)) p.pop_back();
  return p;
}

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned long long c = 1;
  for (int i = 0; i < k; ++i) {
    c = c * (unsigned long long)(n - i) / (unsigned long long)(i + 1);
  }
  return c;
}

double jacobian(const HarmonicMap& map, cplx z) {
  return std::norm(map.eval_dz(z)) - std::norm(map.eval_dzbar(z));
}

const char* to_string(Orientation o) {
  switch (o) {
    case Orientation::SensePreserving: return "sense-preserving";
    case Orientation::SenseReversing: return "sense-reversing";
    case Orientation::Singular: return "singular";
  }
  return "?";
}

Orientation classify_orientation(const HarmonicMap& map, cplx z,
                                 double eps_singular) {
  const double a = std::norm(map.eval_dz(z));
  const double b = std::norm(map.eval_dzbar(z));
  const double j = a - b;
  if (std::abs(j) <= eps_singular * (a + b)) return Orientation::Singular;
  return j > 0 ? Orientation::SensePreserving : Orientation::SenseReversing;
}

namespace {

struct Rational {
  poly num, den;

  cplx operator()(cplx z) const { return polyval(num, z) / polyval(den, z); }

  Rational derivative() const {
    // (p/q)' = (p'q - pq')/q^2
    return {polyadd(polymul(polyder(num), den),
                    polyscale(polymul(num, polyder(den)), -1.0)),
            polymul(den, den)};
  }
};

}  // namespace

HarmonicMap make_rational_pair(const RationalPair& spec, std::string name) {
  if (spec.h_den.empty() || spec.g_den.empty() || spec.h_num.empty() ||
      spec.g_num.empty())
    throw std::invalid_argument("rational pair: empty coefficient list");
  if (polytrim(spec.h_den) == poly{cplx(0.0)} ||
      polytrim(spec.g_den) == poly{cplx(0.0)})
    throw std::invalid_argument("rational pair: zero denominator polynomial");

  Rational h{spec.h_num, spec.h_den};
  Rational g{spec.g_num, spec.g_den};
  Rational dh = h.derivative();
  Rational dg = g.derivative();
  Rational ddh = dh.derivative();
  Rational ddg = dg.derivative();

  HarmonicMap map;
  map.name = std::move(name);
  map.eval_f = [h, g](cplx z) { return h(z) + std::conj(g(z)); };
  map.eval_dz = [dh](cplx z) { return dh(z); };
  map.eval_dzbar = [dg](cplx z) { return std::conj(dg(z)); };
  map.eval_ddh = [ddh](cplx z) { return ddh(z); };
  map.eval_ddg = [ddg](cplx z) { return ddg(z); };
  map.eval_h = [h](cplx z) { return h(z); };
  map.eval_g = [g](cplx z) { return g(z); };
  return map;
}

HarmonicMap make_mpw(int n, double r) {
  if (n < 1) throw std::invalid_argument("mpw: n must be >= 1");
  // f = z^{n-1}/(z^n - r^n) - conj(z)
  RationalPair rp;
  rp.h_num = poly(n, cplx(0.0));
  rp.h_num.back() = 1.0;  // z^{n-1}
  rp.h_den = poly(n + 1, cplx(0.0));
  rp.h_den[0] = -std::pow(r, n);
  rp.h_den[n] = 1.0;
  rp.g_num = {0.0, -1.0};  // g = -z
  rp.g_den = {1.0};
  HarmonicMap map = make_rational_pair(rp, "mpw");
  for (int k = 0; k < n; ++k)
    map.poles.emplace_back(std::polar(r, 2.0 * pi * k / n), 1);
  return map;
}

HarmonicMap make_rhie(int n, double r, double eps) {
  if (n < 1) throw std::invalid_argument("rhie: n must be >= 1");
  // f = ((z^n - eps r^n) / (z^{n+1} - r^n z)) - conj(z)
  const double rn = std::pow(r, n);
  RationalPair rp;
  rp.h_num = poly(n + 1, cplx(0.0));
  rp.h_num[0] = -eps * rn;
  rp.h_num[n] = 1.0;
  rp.h_den = poly(n + 2, cplx(0.0));
  rp.h_den[1] = -rn;
  rp.h_den[n + 1] = 1.0;
  rp.g_num = {0.0, -1.0};
  rp.g_den = {1.0};
  HarmonicMap map = make_rational_pair(rp, "rhie");
  map.poles.emplace_back(cplx(0.0), 1);
  for (int k = 0; k < n; ++k)
    map.poles.emplace_back(std::polar(r, 2.0 * pi * k / n), 1);
  return map;
}

HarmonicMap make_wilmshurst(int n) {
  if (n < 1) throw std::invalid_argument("wilmshurst: n must be >= 1");
  if (n > 60) throw std::invalid_argument("wilmshurst: n too large");
  // p(z) = z^n + (z-1)^n, f = p(z) + conj(i (z-1)^n - i z^n)
  poly p(n + 1, cplx(0.0)), q(n + 1, cplx(0.0));
  for (int k = 0; k <= n; ++k) {
    const double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
    const cplx binom = double(binomial(n, k)) * sign;  // coeff of (z-1)^n
    p[k] = binom;
    q[k] = cplx(0.0, 1.0) * binom;
  }
  p[n] += 1.0;                 // + z^n
  q[n] -= cplx(0.0, 1.0);      // - i z^n; leading terms cancel
  RationalPair rp;
  rp.h_num = polytrim(p);
  rp.h_den = {1.0};
  rp.g_num = polytrim(q);
  rp.g_den = {1.0};
  return make_rational_pair(rp, "wilmshurst");
}

HarmonicMap make_tan_conj() {
  // f = tan(z) - conj(z);  h' = 1 + tan^2, h'' = 2 tan (1 + tan^2)
  HarmonicMap map;
  map.name = "tan_conj";
  map.eval_f = [](cplx z) { return std::tan(z) - std::conj(z); };
  map.eval_dz = [](cplx z) {
    const cplx t = std::tan(z);
    return 1.0 + t * t;
  };
  map.eval_dzbar = [](cplx) { return cplx(-1.0); };
  map.eval_ddh = [](cplx z) {
    const cplx t = std::tan(z);
    return 2.0 * t * (1.0 + t * t);
  };
  map.eval_ddg = [](cplx) { return cplx(0.0); };
  map.eval_h = [](cplx z) { return std::tan(z); };
  map.eval_g = [](cplx z) { return -z; };
  for (int k = -5; k <= 5; ++k)  // odd multiples of pi/2 within |x| <= 8
    map.poles.emplace_back(cplx((2 * k + 1) * pi / 2.0, 0.0), 1);
  return map;
}

HarmonicMap make_einstein() {
  // Chang-Refsdal lens without shear: f = 1/z - conj(z)
  RationalPair rp;
  rp.h_num = {1.0};
  rp.h_den = {0.0, 1.0};
  rp.g_num = {0.0, -1.0};
  rp.g_den = {1.0};
  HarmonicMap map = make_rational_pair(rp, "einstein");
  map.poles.emplace_back(cplx(0.0), 1);
  return map;
}

namespace {

// principal arcsine; arguments on the real cut (|x| > 1) evaluate as the
// limit from above
cplx asin_limit_above(cplx u) {
  if (u.imag() == 0.0 && std::abs(u.real()) > 1.0) u = cplx(u.real(), +0.0);
  return std::asin(u);
}

}  // namespace

HarmonicMap make_isothermal(double k, cplx w) {
  // f = z - arcsin(k / (conj(z) + conj(w))) = z + conj(g), with
  // g(z) = -arcsin(k / (z + w)) analytic off the critical arcs
  if (k == 0.0) throw std::invalid_argument("isothermal: k must be nonzero");
  auto g = [k, w](cplx z) { return -asin_limit_above(k / (z + w)); };
  auto dg = [k, w](cplx z) {
    // g'= k / (s^2 sqrt(1 - (k/s)^2)), s = z + w
    const cplx s = z + w;
    const cplx u = k / s;
    return k / (s * s * std::sqrt(1.0 - u * u));
  };
  auto ddg = [k, w](cplx z) {
    const cplx s = z + w;
    const cplx u = k / s;
    const cplx root = std::sqrt(1.0 - u * u);
    const cplx s3 = s * s * s;
    return -2.0 * k / (s3 * root) -
           k * k * k / (s3 * s * s * root * root * root);
  };
  HarmonicMap map;
  map.name = "isothermal";
  map.eval_f = [g](cplx z) { return z + std::conj(g(z)); };
  map.eval_dz = [](cplx) { return cplx(1.0); };
  map.eval_dzbar = [dg](cplx z) { return std::conj(dg(z)); };
  map.eval_ddh = [](cplx) { return cplx(0.0); };
  map.eval_ddg = ddg;
  map.eval_h = [](cplx z) { return z; };
  map.eval_g = g;
  map.poles.emplace_back(-w, 1);  // g blows up at z = -w
  return map;
}

HarmonicMap make_shifted(HarmonicMap base, cplx constant) {
  HarmonicMap map = std::move(base);
  evaluator f0 = map.eval_f;
  map.eval_f = [f0, constant](cplx z) { return f0(z) + constant; };
  if (map.eval_h) {
    evaluator h0 = map.eval_h;
    map.eval_h = [h0, constant](cplx z) { return h0(z) + constant; };
  }
  map.name += "+const";
  return map;
}

}  // namespace hnewton
