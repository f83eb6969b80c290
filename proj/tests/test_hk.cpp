#include <doctest.h>

#include <cmath>
#include <numbers>

#include "needlecomp/errors.hpp"
#include "needlecomp/hk.hpp"

using namespace needlecomp;
using std::numbers::pi;

TEST_CASE("hk_outer examples") {
  const auto eq = decompose(RoundSphere{2, 1.0}, GeodesicSphere{pi / 2});
  for (double t : {0.1, 0.7, 1.5}) {
    const auto r = hk_outer(eq, t);
    CHECK(r.lhs == doctest::Approx(2 * pi * std::sin(t)).epsilon(1e-11));
    CHECK(r.equality);
    REQUIRE(r.t.has_value());
    CHECK(*r.t == t);
  }
  const auto ball = decompose(EuclideanBall{3, 1.0}, GeodesicSphere{0.5});
  const auto r = hk_outer(ball, 0.25);
  const double shell = 4 * pi / 3 * (std::pow(0.75, 3) - std::pow(0.5, 3));
  CHECK(r.lhs == doctest::Approx(shell).epsilon(1e-11));
  CHECK(r.rhs == doctest::Approx(shell).epsilon(1e-11));
  CHECK(r.equality);

  // lhs/t and rhs/t approach m_S as t -> 0.
  const auto small = hk_outer(ball, 1e-6);
  CHECK(small.lhs / 1e-6 == doctest::Approx(ball.surface_total).epsilon(1e-5));
  CHECK(small.rhs / 1e-6 == doctest::Approx(ball.surface_total).epsilon(1e-5));
}

TEST_CASE("hk_full examples") {
  auto r = hk_full(decompose(RoundSphere{2, 1.0}, GeodesicSphere{pi / 2}));
  CHECK(r.lhs == doctest::Approx(4 * pi).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(4 * pi).epsilon(1e-10));
  CHECK(r.equality);
  CHECK(r.statement == Statement::hk_full);
  CHECK_FALSE(r.t.has_value());

  const double delta = 0.1;
  r = hk_full(decompose(sine_interval(CurvatureDimension(1.0, 2.0), pi - delta), LevelPoint{pi / 2}));
  CHECK(r.lhs == doctest::Approx(1 + std::cos(delta)).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(r.gap > 0.004);
  CHECK_FALSE(r.equality);
}

TEST_CASE("hk_full on a concentric ball integrates J over [-D, D]") {
  // The outer part of J is not truncated at the ball's boundary, so the
  // bound is strict: rhs = m_S * integral_{-rho}^{D} (1 + r/rho)^(n-1) dr.
  for (int n : {2, 3, 5}) {
    for (double rho : {0.25, 0.5, 0.75}) {
      const auto dec = decompose(EuclideanBall{n, 1.0}, GeodesicSphere{rho});
      const auto r = hk_full(dec);
      const double area = unit_sphere_area(n - 1);
      CHECK(r.lhs == doctest::Approx(area / n).epsilon(1e-12));
      const double expected = area * std::pow(rho, n - 1) * rho / n * std::pow(1 + 2.0 / rho, n);
      CHECK(r.rhs == doctest::Approx(expected).epsilon(1e-10));
      CHECK_FALSE(r.equality);
    }
  }
}

TEST_CASE("report invariants") {
  const std::vector<std::pair<GeometrySpec, SurfaceSpec>> cases = {
      {RoundSphere{3, 1.0}, GeodesicSphere{1.0}},
      {EuclideanBall{4, 2.0}, GeodesicSphere{0.3}},
      {SphericalSuspension{CurvatureDimension(3.0, 4.0), 2.0}, GeodesicSphere{0.4}},
      {constant_interval(CurvatureDimension(0.0, 2.0), 1.0), LevelPoint{0.3}},
  };
  for (const auto& [g, s] : cases) {
    const auto dec = decompose(g, s);
    for (const auto& r : {hk_full(dec), hk_outer(dec, 0.2), hk_outer(dec, 5.0)}) {
      CHECK(r.gap == doctest::Approx(r.rhs - r.lhs));
      CHECK(r.gap >= -1e-9 * r.rhs);
      if (r.equality) {
        for (const auto& d : r.per_needle) CHECK(d.profile_match);
      }
      double lhs = 0, rhs = 0;
      for (const auto& d : r.per_needle) {
        lhs += d.lhs;
        rhs += d.rhs;
      }
      CHECK(lhs == doctest::Approx(r.lhs));
      CHECK(rhs == doctest::Approx(r.rhs));
    }
  }
}

TEST_CASE("closed form bounds") {
  const auto dec = decompose(model_interval(CurvatureDimension(1.0, 2.0)), LevelPoint{pi / 2});
  auto r = closed_form_bound(dec, CorollaryBranch::constant_H, 0.0);
  CHECK(r.rhs == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(r.lhs == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.equality);
  CHECK(r.statement == Statement::corollary_constant_H);

  const auto ball = decompose(EuclideanBall{3, 1.0}, GeodesicSphere{0.5});
  CHECK_THROWS_AS(closed_form_bound(ball, CorollaryBranch::diameter), PreconditionError);
  CHECK_THROWS_AS(closed_form_bound(ball, CorollaryBranch::positive_K), PreconditionError);
  CHECK_THROWS_AS(closed_form_bound(ball, CorollaryBranch::constant_H, 1.0), PreconditionError);
  CHECK(closed_form_bounds(ball).size() == 1);

  // diam * m_S for a non-positively curved surface.
  const auto eq = decompose(RoundSphere{2, 1.0}, GeodesicSphere{pi / 2});
  r = closed_form_bound(eq, CorollaryBranch::diameter);
  CHECK(r.rhs == doctest::Approx(pi * 2 * pi).epsilon(1e-12));

  for (double r0 : {0.5, 1.0, 2.0}) {
    const auto cap = decompose(RoundSphere{3, 1.0}, GeodesicSphere{r0});
    const auto full = hk_full(cap);
    const auto c = closed_form_bound(cap, CorollaryBranch::positive_K);
    const auto v = closed_form_bound(cap, CorollaryBranch::positive_K_sphere_volume);
    CHECK(c.rhs == doctest::Approx(full.rhs).epsilon(1e-9));
    CHECK(v.rhs == doctest::Approx(c.rhs).epsilon(1e-9));
    CHECK(c.equality);
  }
  const auto frac = decompose(model_interval(CurvatureDimension(1.0, 4.5)), LevelPoint{1.0});
  CHECK_THROWS_AS(closed_form_bound(frac, CorollaryBranch::positive_K_sphere_volume),
                  PreconditionError);
}

TEST_CASE("Levy-Gromov check") {
  for (double r0 : {pi / 6, pi / 3, pi / 2, 2.5}) {
    const auto rep = levy_gromov_check(decompose(RoundSphere{2, 1.0}, GeodesicSphere{r0}));
    CHECK(rep.pass);
    CHECK(rep.equality);
    CHECK(rep.volume_fraction == doctest::Approx((1 - std::cos(r0)) / 2).epsilon(1e-10));
  }
  const auto strict =
      levy_gromov_check(decompose(sine_interval(CurvatureDimension(1.0, 2.0), 2.5), LevelPoint{1.0}));
  CHECK(strict.pass);
  CHECK_FALSE(strict.equality);
  CHECK_THROWS_AS(levy_gromov_check(decompose(EuclideanBall{3, 1.0}, GeodesicSphere{0.5})),
                  ParameterError);
}

TEST_CASE("equality detection") {
  auto rep = equality_detect(decompose(RoundSphere{2, 1.0}, GeodesicSphere{pi / 2}));
  CHECK(rep.rigid);
  CHECK(rep.failed.empty());
  rep = equality_detect(decompose(SphericalSuspension{CurvatureDimension(2.0, 3.0), 5.0},
                                  GeodesicSphere{0.8}));
  CHECK(rep.rigid);
  rep = equality_detect(
      decompose(sine_interval(CurvatureDimension(1.0, 2.0), pi - 0.1), LevelPoint{pi / 2}));
  CHECK_FALSE(rep.rigid);
  CHECK_FALSE(rep.full_span);
  CHECK_FALSE(rep.failed.empty());
  CHECK_THROWS_AS(equality_detect(decompose(EuclideanBall{3, 1.0}, GeodesicSphere{0.5})),
                  ParameterError);
}

TEST_CASE("statement tags") {
  CHECK(statement_tag(Statement::hk_outer) == "hk-outer");
  CHECK(statement_tag(Statement::hk_full) == "hk-full");
  CHECK(statement_tag(Statement::corollary_positive_K) == "corollary-positive-K");
}
