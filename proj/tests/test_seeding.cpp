#include <doctest.h>

#include <cmath>
#include <random>

#include "hnewton/seeding.hpp"

using namespace hnewton;

TEST_SUITE_BEGIN("seeding");

TEST_CASE("solve_linear_harmonic closed forms") {
  CHECK(solve_linear_harmonic(cplx(2.0), cplx(1.0), cplx(3.0)) == cplx(1.0));
  const cplx c(0.4, -1.1);
  CHECK(solve_linear_harmonic(cplx(1.0), cplx(0.0), c) == c);
  CHECK_THROWS_AS(solve_linear_harmonic(cplx(1.0), cplx(1.0), cplx(1.0)),
                  NoUniqueSolution);
  CHECK_THROWS_AS(solve_linear_harmonic(cplx(0.0), cplx(0.0), cplx(1.0)),
                  NoUniqueSolution);
}

TEST_CASE("solve_linear_harmonic substitution property") {
  std::mt19937 rng(3u);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  int tested = 0;
  while (tested < 50) {
    const cplx a(uni(rng), uni(rng)), b(uni(rng), uni(rng)),
        c(uni(rng), uni(rng));
    // the residual scales like eps * (|a|+|b|)/||a|-|b||, so keep the
    // conditioning bounded
    if (std::abs(std::abs(a) - std::abs(b)) < 0.1 * (std::abs(a) + std::abs(b)))
      continue;
    const cplx z = solve_linear_harmonic(a, b, c);
    const double scale = std::abs(a * z) + std::abs(b * z) + std::abs(c);
    CHECK(std::abs(a * z + std::conj(b * z) - c) <= 1e-13 * (1.0 + scale));
    ++tested;
  }
}

TEST_CASE("pole seeds for 1/z^3 + 10(1+i) + conj(2i/z^2)") {
  LaurentData data;
  data.center = cplx(0.0);
  data.n = 3;
  data.a = {{-3, cplx(1.0)}, {0, cplx(10.0, 10.0)}};
  data.b = {{-2, cplx(0.0, 2.0)}};
  const auto seeds = pole_seeds(data);
  REQUIRE(seeds.size() == 3);

  // |seed| = (sqrt(2)/20)^{1/3}
  const double want = std::pow(std::sqrt(2.0) / 20.0, 1.0 / 3.0);
  CHECK(want == doctest::Approx(0.41351855420001377).epsilon(1e-14));
  for (const cplx s : seeds)
    CHECK(std::abs(std::abs(s) - want) <= 1e-14);

  // ascending principal arguments: -5pi/12, pi/4, 11pi/12
  CHECK(std::arg(seeds[0]) == doctest::Approx(-5.0 * pi / 12).epsilon(1e-13));
  CHECK(std::arg(seeds[1]) == doctest::Approx(pi / 4).epsilon(1e-13));
  CHECK(std::arg(seeds[2]) == doctest::Approx(11.0 * pi / 12).epsilon(1e-13));

  // substituting back into the leading terms recovers c
  const cplx c = -(data.a[0] + std::conj(cplx(0.0)));
  for (const cplx s : seeds) {
    const cplx recovered = 1.0 / (s * s * s);  // a_{-3} s^{-3}, b_{-3} = 0
    CHECK(std::abs(recovered - c) <= 1e-12 * std::abs(c));
  }

  // consecutive seeds are equispaced: |s_j - s_{j+1}| = 2 sin(pi/n) |s_j|
  const double gap = 2.0 * std::sin(pi / 3) * want;
  CHECK(std::abs(std::abs(seeds[0] - seeds[1]) - gap) <= 1e-13);
  CHECK(std::abs(std::abs(seeds[1] - seeds[2]) - gap) <= 1e-13);
}

TEST_CASE("pole seeds: first-order pole reduces to z0 + 1/c") {
  LaurentData data;
  data.center = cplx(0.3);
  data.n = 1;
  data.a = {{-1, cplx(1.0)}, {0, cplx(-2.0)}};
  const auto seeds = pole_seeds(data);
  REQUIRE(seeds.size() == 1);
  CHECK(std::abs(seeds[0] - cplx(0.8)) <= 1e-16);
}

TEST_CASE("pole seeds error cases") {
  LaurentData data;
  data.n = 2;
  data.a = {{-2, cplx(1.0)}};
  data.b = {{-2, cplx(0.0, 1.0)}};  // |a_{-2}| = |b_{-2}|
  CHECK_THROWS_AS(pole_seeds(data), NoUniqueSolution);

  LaurentData nodir;  // 1/z with no constant: c = 0
  nodir.n = 1;
  nodir.a = {{-1, cplx(1.0)}};
  CHECK_THROWS_AS(pole_seeds(nodir), DegenerateConstant);

  LaurentData empty;
  empty.n = 1;
  CHECK_THROWS_AS(pole_seeds(empty), std::invalid_argument);
}

TEST_CASE("infinity seeds for z^2/(z^3 - 0.216) - 0.7 - conj(z)") {
  const std::map<int, cplx> a = {{0, cplx(-0.7)}, {1, cplx(0.0)}};
  const std::map<int, cplx> b = {{1, cplx(-1.0)}};
  const auto seeds = infinity_seeds(a, b, 1);
  REQUIRE(seeds.size() == 1);
  CHECK(std::abs(seeds[0] - cplx(-0.7)) <= 1e-16);
}

TEST_CASE("infinity seeds degeneracy") {
  // f = z + conj(z) + c has |a_1| = |b_1|
  const std::map<int, cplx> a = {{0, cplx(1.0)}, {1, cplx(1.0)}};
  const std::map<int, cplx> b = {{1, cplx(1.0)}};
  CHECK_THROWS_AS(infinity_seeds(a, b, 1), NoUniqueSolution);
}

TEST_CASE("normal form of the Fig. 6 functions") {
  SUBCASE("top: f = z + conj z + 2i z^2 + conj(i z^2)") {
    const std::map<int, cplx> a = {{1, cplx(1.0)}, {2, cplx(0.0, 2.0)}};
    const std::map<int, cplx> b = {{1, cplx(1.0)}, {2, cplx(0.0, 1.0)}};
    const NormalFormData nf = normal_form(a, b, cplx(0.0));
    CHECK(nf.theta == 0.0);
    CHECK(nf.scale == cplx(1.0));
    CHECK(nf.alpha.at(2) == cplx(0.0, 2.0));
    CHECK(nf.beta.at(2) == cplx(0.0, 1.0));
    CHECK(nf.c_tilde == cplx(0.0, -1.0));
  }
  SUBCASE("bottom: f = z + conj z + 2 z^2 + conj(z^2)") {
    const std::map<int, cplx> a = {{1, cplx(1.0)}, {2, cplx(2.0)}};
    const std::map<int, cplx> b = {{1, cplx(1.0)}, {2, cplx(1.0)}};
    const NormalFormData nf = normal_form(a, b, cplx(0.0));
    CHECK(nf.theta == 0.0);
    CHECK(nf.c_tilde == cplx(-3.0));
  }
  SUBCASE("a_1 = i, b_1 = -i gives theta = 0") {
    const std::map<int, cplx> a = {{1, cplx(0.0, 1.0)}};
    const std::map<int, cplx> b = {{1, cplx(0.0, -1.0)}, {2, cplx(0.1)}};
    const NormalFormData nf = normal_form(a, b, cplx(0.0));
    CHECK(nf.theta == 0.0);
  }
}

TEST_CASE("normal form theta lands in [0, pi)") {
  const double theta_true = 2.0;
  const cplx a1(0.7, -0.3);
  const cplx b1 = std::conj(a1 * std::polar(1.0, 2.0 * theta_true));
  const std::map<int, cplx> a = {{1, a1}, {2, cplx(0.2, 0.1)}};
  const std::map<int, cplx> b = {{1, b1}, {2, cplx(-0.1, 0.4)}};
  const NormalFormData nf = normal_form(a, b, cplx(0.0));
  CHECK(nf.theta == doctest::Approx(theta_true).epsilon(1e-13));
  CHECK(std::abs(std::conj(b1) - a1 * std::polar(1.0, 2.0 * nf.theta)) <= 1e-14);
}

TEST_CASE("normal form round-trip identity") {
  std::mt19937 rng(17u);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const int K = 6;

  for (int trial = 0; trial < 5; ++trial) {
    const cplx z0(uni(rng), uni(rng));
    const double theta_true = std::abs(uni(rng)) * 3.0;
    const cplx a1(uni(rng) + 1.5, uni(rng));
    const cplx b1 = std::conj(a1 * std::polar(1.0, 2.0 * theta_true));
    std::map<int, cplx> a = {{1, a1}};
    std::map<int, cplx> b = {{1, b1}};
    for (int k = 2; k <= K; ++k) {
      a[k] = 0.5 * cplx(uni(rng), uni(rng));
      b[k] = 0.5 * cplx(uni(rng), uni(rng));
    }

    const NormalFormData nf = normal_form(a, b, z0, K);
    CHECK(nf.theta >= 0.0);
    CHECK(nf.theta < pi);

    auto eval_orig = [&](cplx z) {
      cplx hs = 0.0, gs = 0.0;
      for (int k = 1; k <= K; ++k) {
        hs += a[k] * std::pow(z - z0, k);
        gs += b[k] * std::pow(z - z0, k);
      }
      return hs + std::conj(gs);
    };
    auto eval_normal = [&](cplx z) {
      const cplx zeta = std::polar(1.0, -nf.theta) * (z - z0);
      cplx acc = zeta + std::conj(zeta);
      for (int k = 2; k <= K; ++k) {
        acc += nf.alpha.at(k) * std::pow(zeta, k) +
               std::conj(nf.beta.at(k) * std::pow(zeta, k));
      }
      return nf.scale * acc;
    };

    for (int s = 0; s < 20; ++s) {
      const cplx z = z0 + 0.1 * cplx(uni(rng), uni(rng));
      const cplx v0 = eval_orig(z);
      const cplx v1 = eval_normal(z);
      CHECK(std::abs(v0 - v1) <= 1e-8 * (1.0 + std::abs(v0)));
    }
  }
}

TEST_CASE("normal form rejects non-singular data") {
  const std::map<int, cplx> b1 = {{1, cplx(1.0)}};
  CHECK_THROWS_AS(normal_form({{1, cplx(0.0)}}, b1, cplx(0.0)), NotSingularZero);
  CHECK_THROWS_AS(normal_form({{1, cplx(2.0)}}, b1, cplx(0.0)), NotSingularZero);
  const std::map<int, cplx> a_const = {{0, cplx(1.0)}, {1, cplx(1.0)}};
  CHECK_THROWS_AS(normal_form(a_const, b1, cplx(0.0)), NotSingularZero);
}

TEST_CASE("singular seeds, branch with Im(c_tilde) != 0") {
  const std::map<int, cplx> a = {{1, cplx(1.0)}, {2, cplx(0.0, 2.0)}};
  const std::map<int, cplx> b = {{1, cplx(1.0)}, {2, cplx(0.0, 1.0)}};
  const NormalFormData nf = normal_form(a, b, cplx(0.0));

  const auto seeds = singular_seeds(nf, 0.003);
  REQUIRE(seeds.size() == 2);
  const double s = std::sqrt(0.003);
  CHECK(s == doctest::Approx(0.05477225575051661).epsilon(1e-15));
  CHECK(std::abs(seeds[0] - cplx(0.0, s)) <= 1e-16);
  CHECK(std::abs(seeds[1] - cplx(0.0, -s)) <= 1e-16);
  // symmetric about z0, exactly
  CHECK((seeds[0] + seeds[1]) / 2.0 == nf.z0);

  CHECK_THROWS_AS(singular_seeds(nf, 0.0), NotSingularZero);
  CHECK_THROWS_AS(singular_seeds(nf, -0.01), NotSingularZero);
}

TEST_CASE("singular seeds, real c_tilde branch") {
  const std::map<int, cplx> a = {{1, cplx(1.0)}, {2, cplx(2.0)}};
  const std::map<int, cplx> b = {{1, cplx(1.0)}, {2, cplx(1.0)}};
  const NormalFormData nf = normal_form(a, b, cplx(0.0));
  REQUIRE(nf.c_tilde == cplx(-3.0));

  const auto plus = singular_seeds(nf, 0.01);
  REQUIRE(plus.size() == 1);
  CHECK(std::abs(plus[0] - cplx(-0.01535359952768478)) <= 1e-15);

  const auto minus = singular_seeds(nf, -0.01);
  REQUIRE(minus.size() == 1);
  CHECK(std::abs(minus[0] - cplx(0.01467688363035169)) <= 1e-15);

  CHECK_THROWS_AS(singular_seeds(nf, 0.0), NotSingularZero);
}

TEST_CASE("singular seeds reject the cusp case") {
  NormalFormData nf;
  nf.z0 = cplx(0.0);
  nf.theta = 0.0;
  nf.scale = cplx(1.0);
  nf.alpha[2] = cplx(1.0, 0.5);
  nf.beta[2] = cplx(1.0, 0.5);  // |alpha_2| = |beta_2|, c_tilde = -2 real
  nf.c_tilde = -(nf.alpha[2] + std::conj(nf.beta[2]));
  REQUIRE(nf.c_tilde.imag() == 0.0);
  CHECK_THROWS_AS(singular_seeds(nf, 0.01), NotSingularZero);

  NormalFormData zero_ct;
  zero_ct.c_tilde = cplx(0.0);
  CHECK_THROWS_AS(singular_seeds(zero_ct, 0.01), NotSingularZero);
}

TEST_SUITE_END();
