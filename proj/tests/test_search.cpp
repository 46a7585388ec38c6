#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "hnewton/search.hpp"

using namespace hnewton;

namespace {

HarmonicMap analytic_poly(poly coeffs) {
  RationalPair rp;
  rp.h_num = std::move(coeffs);
  rp.g_num = {0.0};
  return make_rational_pair(rp, "analytic");
}

}  // namespace

TEST_SUITE_BEGIN("search");

TEST_CASE("make_grid counts and ordering") {
  GridSpec s;
  s.x_min = 0.0;
  s.x_max = 1.0;
  s.y_min = 0.0;
  s.y_max = 1.0;
  s.mesh = 0.5;
  CHECK(s.nx() == 3);
  CHECK(s.ny() == 3);
  const auto pts = make_grid(s);
  REQUIRE(pts.size() == 9);
  CHECK(pts[0] == cplx(0.0, 0.0));
  CHECK(pts[1] == cplx(0.5, 0.0));  // x varies fastest
  CHECK(pts[3] == cplx(0.0, 0.5));
  CHECK(pts[8] == cplx(1.0, 1.0));

  GridSpec d;  // default window [-2,2]^2, mesh 0.05
  CHECK(d.nx() == 81);
  CHECK(d.ny() == 81);
  CHECK(make_grid(d).size() == 6561);

  GridSpec w;  // the wilmshurst window must not lose a column to rounding
  w.x_min = -1.5;
  w.x_max = 2.5;
  w.y_min = -1.5;
  w.y_max = 2.5;
  w.mesh = 0.05;
  CHECK(w.nx() == 81);
  CHECK(make_grid(w).size() == 6561);

  GridSpec t;
  t.x_min = -8.0;
  t.x_max = 8.0;
  t.y_min = -2.0;
  t.y_max = 2.0;
  t.mesh = 0.2;
  CHECK(t.nx() == 81);
  CHECK(t.ny() == 21);
  CHECK(make_grid(t).size() == 1701);

  GridSpec bad;
  bad.x_min = 1.0;
  bad.x_max = -1.0;
  CHECK_THROWS_AS(make_grid(bad), std::invalid_argument);
  GridSpec bad2;
  bad2.mesh = 0.0;
  CHECK_THROWS_AS(make_grid(bad2), std::invalid_argument);
}

TEST_CASE("find_zeros recovers the mpw zero set") {
  const HarmonicMap f = make_mpw(3, 0.6);
  GridSpec s;  // defaults
  const auto zeros = find_zeros(f, s);
  REQUIRE(zeros.size() == 10);
  CHECK(std::is_sorted(zeros.begin(), zeros.end(),
                       [](const ZeroRecord& a, const ZeroRecord& b) {
                         if (a.location.real() != b.location.real())
                           return a.location.real() < b.location.real();
                         return a.location.imag() < b.location.imag();
                       }));
  int total_members = 0;
  for (const auto& z : zeros) {
    // stored residual matches a fresh evaluation
    CHECK(std::abs(f.eval_f(z.location)) == z.residual);
    CHECK(z.residual < 1e-13);
    CHECK(z.jacobian == jacobian(f, z.location));
    CHECK(z.orientation == classify_orientation(f, z.location));
    CHECK(z.orientation != Orientation::Singular);
    CHECK(z.members >= 1);
    total_members += z.members;
  }
  CHECK(total_members > 6000);  // nearly every grid point converges somewhere
  CHECK_FALSE(nonisolated_suspected(zeros));

  // all ten locations are distinct
  std::set<std::pair<double, double>> locs;
  for (const auto& z : zeros)
    locs.insert({z.location.real(), z.location.imag()});
  CHECK(locs.size() == 10);
}

TEST_CASE("find_zeros is stable under re-running") {
  const HarmonicMap f = make_wilmshurst(3);
  GridSpec s;
  const auto a = find_zeros(f, s);
  const auto b = find_zeros(f, s);
  REQUIRE(a.size() == 9);
  REQUIRE(b.size() == 9);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].location == b[i].location);  // bitwise deterministic
    CHECK(a[i].residual == b[i].residual);
    CHECK(a[i].members == b[i].members);
  }
}

TEST_CASE("label_basins splits the plane for z^2 - 1") {
  const HarmonicMap f = analytic_poly({-1.0, 0.0, 1.0});
  GridSpec s;
  s.mesh = 0.1;
  const auto zeros = find_zeros(f, s);
  REQUIRE(zeros.size() == 2);
  CHECK(zeros[0].location.real() < 0.0);  // sorted by re: -1 first
  CHECK(zeros[1].location.real() > 0.0);

  const auto lab = label_basins(f, s, {}, zeros);
  REQUIRE(lab.labels.size() == std::size_t(s.nx()) * s.ny());
  REQUIRE(lab.iteration_counts.size() == lab.labels.size());
  const auto pts = make_grid(s);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].real() > 0.05) CHECK(lab.labels[i] == 1);
    if (pts[i].real() < -0.05) CHECK(lab.labels[i] == 0);
    // the imaginary axis never converges for this map
    if (pts[i].real() == 0.0) CHECK(lab.labels[i] == -1);
    if (lab.labels[i] >= 0) CHECK(lab.iteration_counts[i] >= 0);
  }
  CHECK(lab.zeros.size() == 2);
}

TEST_CASE("nonisolated zero curves are flagged") {
  const HarmonicMap e = make_einstein();
  GridSpec s;
  s.x_min = -1.5;
  s.x_max = 1.5;
  s.y_min = -1.5;
  s.y_max = 1.5;
  s.mesh = 0.05;
  const auto zeros = find_zeros(e, s, {}, 1e-8);
  CHECK(zeros.size() > 50);
  CHECK(nonisolated_suspected(zeros));
}

TEST_CASE("csv and json exports") {
  const HarmonicMap f = analytic_poly({-1.0, 0.0, 1.0});
  GridSpec s;
  s.mesh = 0.1;
  const auto zeros = find_zeros(f, s);
  REQUIRE(zeros.size() == 2);

  const std::string csv = zero_records_csv(zeros);
  CHECK(csv.rfind("re,im,residual,jacobian,orientation,members\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.find("sense-preserving") != std::string::npos);

  const auto parsed = nlohmann::json::parse(zero_records_json(zeros));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0]["re"].get<double>() == zeros[0].location.real());
  CHECK(parsed[0]["im"].get<double>() == zeros[0].location.imag());
  CHECK(parsed[1]["members"].get<int>() == zeros[1].members);
  CHECK(parsed[0]["orientation"].get<std::string>() ==
        to_string(zeros[0].orientation));
}

TEST_SUITE_END();
