#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "hnewton/function_spec.hpp"

using namespace hnewton;

TEST_SUITE_BEGIN("function_spec");

TEST_CASE("make_builtin matches the direct constructors") {
  const HarmonicMap a = make_builtin("mpw", R"({"n": 3, "r": 0.6})");
  const HarmonicMap b = make_mpw(3, 0.6);
  for (const cplx z : {cplx(0.9, 0.1), cplx(-0.4, 0.7), cplx(1.3, -0.2)}) {
    CHECK(a.eval_f(z) == b.eval_f(z));
    CHECK(a.eval_dz(z) == b.eval_dz(z));
    CHECK(a.eval_dzbar(z) == b.eval_dzbar(z));
  }
  REQUIRE(a.poles.size() == 3);
  CHECK(a.poles[0].first == b.poles[0].first);

  const HarmonicMap r = make_builtin("rhie", R"({"n": 4, "r": 0.8, "eps": 0.3})");
  CHECK(r.poles.size() == 5);
  const HarmonicMap w = make_builtin("wilmshurst", R"({"n": 5})");
  CHECK(w.eval_f(cplx(0.3, -0.1)) == make_wilmshurst(5).eval_f(cplx(0.3, -0.1)));
  const HarmonicMap t = make_builtin("tan_conj");
  CHECK(t.poles.size() == 11);
  const HarmonicMap e = make_builtin("einstein");
  CHECK(e.eval_f(cplx(2.0)) == make_einstein().eval_f(cplx(2.0)));
  const HarmonicMap iso = make_builtin("isothermal", R"({"k": 0.25, "w": [0.0, 1.0]})");
  CHECK(iso.eval_f(cplx(1.0)) == make_isothermal(0.25, cplx(0.0, 1.0)).eval_f(cplx(1.0)));
}

TEST_CASE("builtin errors") {
  CHECK_THROWS_AS(make_builtin("nope"), std::invalid_argument);
  CHECK_THROWS_AS(make_builtin("mpw", R"({"n": 3})"), std::invalid_argument);
  CHECK_THROWS_AS(make_builtin("mpw", R"({"n": 3, "r": "x"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_builtin("mpw", "not json"), std::invalid_argument);
  CHECK_THROWS_AS(make_builtin("mpw", "[1,2]"), std::invalid_argument);
  CHECK_THROWS_AS(make_builtin("isothermal", R"({"w": 1.0})"),
                  std::invalid_argument);
}

TEST_CASE("rational pair specs") {
  // f = (z^2 - 1) + conj(z)
  const HarmonicMap f = map_from_spec_text(R"({
    "name": "demo",
    "h": {"num": [-1, 0, 1]},
    "g": {"num": [0, 1]}
  })");
  CHECK(f.name == "demo");
  const cplx z(0.5, 0.25);
  CHECK(f.eval_f(z) == z * z - cplx(1.0) + std::conj(z));
  CHECK(f.eval_dz(z) == 2.0 * z);
  CHECK(f.eval_dzbar(z) == cplx(1.0));

  // complex coefficients as [re, im]; denominators and pole metadata
  const HarmonicMap g = map_from_spec_text(R"({
    "h": {"num": [[0, 1]], "den": [0, 1]},
    "g": {"num": [0]},
    "poles": [[0, 0, 1]]
  })");
  CHECK(g.eval_f(cplx(2.0)) == cplx(0.0, 1.0) / cplx(2.0));
  REQUIRE(g.poles.size() == 1);
  CHECK(g.poles[0].first == cplx(0.0));
  CHECK(g.poles[0].second == 1);
}

TEST_CASE("shifted builtin nests") {
  const HarmonicMap s = make_builtin(
      "shifted",
      R"({"base": {"builtin": "mpw", "params": {"n": 3, "r": 0.6}}, "const": [-0.7, 0]})");
  const HarmonicMap direct = make_shifted(make_mpw(3, 0.6), cplx(-0.7));
  const cplx z(0.9, 0.4);
  CHECK(s.eval_f(z) == direct.eval_f(z));
  CHECK(s.eval_dz(z) == direct.eval_dz(z));

  // rational base inside a shift
  const HarmonicMap s2 = map_from_spec_text(R"({
    "builtin": "shifted",
    "params": {"base": {"h": {"num": [0, 1]}, "g": {"num": [0]}}, "const": 2.5}
  })");
  CHECK(s2.eval_f(cplx(1.0)) == cplx(3.5));
}

TEST_CASE("spec text errors") {
  CHECK_THROWS_AS(map_from_spec_text("{"), std::invalid_argument);
  CHECK_THROWS_AS(map_from_spec_text("[]"), std::invalid_argument);
  CHECK_THROWS_AS(map_from_spec_text(R"({"h": {"num": [1]}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(map_from_spec_text(R"({"h": {"num": []}, "g": {"num": [0]}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      map_from_spec_text(R"({"h": {"num": [1]}, "g": {"num": [0]}, "poles": [[0, 0]]})"),
      std::invalid_argument);
}

TEST_CASE("map_from_spec_file round trip") {
  const std::string path = "spec_test_tmp.json";
  {
    std::ofstream out(path);
    out << R"({"builtin": "einstein"})";
  }
  const HarmonicMap f = map_from_spec_file(path);
  CHECK(f.eval_f(cplx(0.5)) == make_einstein().eval_f(cplx(0.5)));
  std::remove(path.c_str());
  CHECK_THROWS_AS(map_from_spec_file("does_not_exist.json"),
                  std::invalid_argument);
}

TEST_SUITE_END();
