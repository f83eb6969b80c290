#include <doctest.h>

#include <cmath>
#include <numbers>

#include "needlecomp/errors.hpp"
#include "needlecomp/geometry.hpp"

using namespace needlecomp;
using std::numbers::pi;

namespace {

std::vector<std::pair<GeometrySpec, SurfaceSpec>> sample_configurations() {
  return {
      {RoundSphere{2, 1.0}, GeodesicSphere{pi / 2}},
      {RoundSphere{3, 2.0}, GeodesicSphere{1.0}},
      {RoundSphere{5, 0.5}, GeodesicSphere{1.2}},
      {EuclideanBall{2, 1.0}, GeodesicSphere{0.25}},
      {EuclideanBall{3, 1.0}, GeodesicSphere{0.5}},
      {EuclideanBall{5, 2.0}, GeodesicSphere{1.5}},
      {SphericalSuspension{CurvatureDimension(2.0, 3.5), 1.7}, GeodesicSphere{0.9}},
      {model_interval(CurvatureDimension(1.0, 2.0)), LevelPoint{pi / 2}},
      {model_interval(CurvatureDimension(1.0, 4.5)), LevelPoint{0.7}},
      {sine_interval(CurvatureDimension(1.0, 2.0), pi - 0.1), LevelPoint{pi / 2}},
      {constant_interval(CurvatureDimension(0.0, 3.0), 2.0), LevelPoint{0.5}},
  };
}

}  // namespace

TEST_CASE("geometry parameters") {
  CHECK(geometry_cd(RoundSphere{3, 2.0}) == CurvatureDimension(0.5, 3.0));
  CHECK(geometry_cd(EuclideanBall{4, 1.0}) == CurvatureDimension(0.0, 4.0));
  CHECK(diameter(RoundSphere{2, 2.0}) == doctest::Approx(2 * pi));
  CHECK(diameter(EuclideanBall{3, 1.5}) == 3.0);
  CHECK(diameter(SphericalSuspension{CurvatureDimension(2.0, 3.0), 1.0}) == doctest::Approx(pi));
  CHECK(diameter(sine_interval(CurvatureDimension(1.0, 2.0), 2.0)) == 2.0);

  CHECK_THROWS_AS(validate(RoundSphere{1, 1.0}), ParameterError);
  CHECK_THROWS_AS(validate(RoundSphere{2, -1.0}), ParameterError);
  CHECK_THROWS_AS(validate(EuclideanBall{3, 0.0}), ParameterError);
  CHECK_THROWS_AS(validate(SphericalSuspension{CurvatureDimension(0.0, 3.0), 1.0}), ParameterError);
  CHECK_THROWS_AS(validate(SphericalSuspension{CurvatureDimension(1.0, 3.0), 0.0}), ParameterError);
  CHECK_THROWS_AS(sine_interval(CurvatureDimension(1.0, 2.0), 4.0), ParameterError);
}

TEST_CASE("surface validation") {
  CHECK_THROWS_AS(validate_surface(RoundSphere{2, 1.0}, GeodesicSphere{0.0}),
                  DegenerateSurfaceError);
  CHECK_THROWS_AS(validate_surface(RoundSphere{2, 1.0}, GeodesicSphere{pi}),
                  DegenerateSurfaceError);
  CHECK_THROWS_AS(validate_surface(RoundSphere{2, 1.0}, GeodesicSphere{4.0}), DomainError);
  CHECK_THROWS_AS(validate_surface(EuclideanBall{3, 1.0}, GeodesicSphere{1.0}),
                  DegenerateSurfaceError);
  CHECK_THROWS_AS(validate_surface(EuclideanBall{3, 1.0}, LevelPoint{0.5}), ParameterError);
  CHECK_THROWS_AS(validate_surface(model_interval(CurvatureDimension(1.0, 2.0)), GeodesicSphere{1.0}),
                  ParameterError);
  try {
    validate_surface(RoundSphere{2, 1.0}, GeodesicSphere{0.0});
  } catch (const DegenerateSurfaceError& e) {
    CHECK(std::string(e.what()).find("surface touches pole") != std::string::npos);
  }
}

TEST_CASE("signed distance") {
  CHECK(signed_distance(EuclideanBall{3, 1.0}, GeodesicSphere{0.5}, 0.75) == 0.25);
  CHECK(signed_distance(RoundSphere{2, 1.0}, GeodesicSphere{pi / 2}, pi) == doctest::Approx(pi / 2));
  CHECK(signed_distance(RoundSphere{2, 1.0}, GeodesicSphere{1.0}, 1.0) == 0.0);
  CHECK(signed_distance(EuclideanBall{3, 1.0}, GeodesicSphere{0.5}, 0.1) < 0.0);
  CHECK_THROWS_AS(signed_distance(EuclideanBall{3, 1.0}, GeodesicSphere{0.5}, 1.5), DomainError);
}

TEST_CASE("decompose examples") {
  auto dec = decompose(model_interval(CurvatureDimension(1.0, 2.0)), LevelPoint{pi / 2});
  REQUIRE(dec.needles.size() == 1);
  CHECK(dec.needles[0].profile().a() == doctest::Approx(-pi / 2));
  CHECK(dec.needles[0].profile().b() == doctest::Approx(pi / 2));
  CHECK(dec.total_mass == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(dec.surface_total == doctest::Approx(1.0).epsilon(1e-12));

  dec = decompose(EuclideanBall{3, 1.0}, GeodesicSphere{0.5});
  CHECK(dec.surface_total == doctest::Approx(pi).epsilon(1e-12));
  CHECK(dec.curvature[0].H_plus == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(dec.curvature[0].H == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(dec.total_mass == doctest::Approx(4 * pi / 3).epsilon(1e-12));

  dec = decompose(RoundSphere{2, 1.0}, GeodesicSphere{pi / 2});
  CHECK(dec.total_mass == doctest::Approx(4 * pi).epsilon(1e-12));
  CHECK(dec.surface_total == doctest::Approx(2 * pi).epsilon(1e-12));
  CHECK(std::abs(dec.curvature[0].H) < 1e-9);

  dec = decompose(model_interval(CurvatureDimension(1.0, 2.0)), LevelPoint{pi / 4});
  CHECK(dec.curvature[0].H == doctest::Approx(1.0).epsilon(1e-9));

  CHECK_THROWS_AS(decompose(RoundSphere{2, 1.0}, GeodesicSphere{0.0}), DegenerateSurfaceError);
}

TEST_CASE("mean curvature sign convention") {
  // Outward from a ball the mean curvature is positive; the inner curvature
  // is its negative for a smooth density.
  for (int n : {2, 3, 5}) {
    for (double rho : {0.25, 0.5, 0.75}) {
      const auto dec = decompose(EuclideanBall{n, 1.0}, GeodesicSphere{rho});
      const auto& c = dec.curvature[0];
      CHECK(c.H_plus == doctest::Approx((n - 1) / rho).epsilon(1e-8));
      CHECK(c.H_minus == doctest::Approx(-(n - 1) / rho).epsilon(1e-8));
      CHECK(c.H == doctest::Approx(std::max(c.H_plus, -c.H_minus)));
    }
  }
  // Past the equator caps have negative curvature.
  const auto dec = decompose(RoundSphere{2, 1.0}, GeodesicSphere{2 * pi / 3});
  CHECK(dec.curvature[0].H == doctest::Approx(1.0 / std::tan(2 * pi / 3)).epsilon(1e-8));
}

TEST_CASE("decomposition invariants") {
  for (const auto& [geom, surf] : sample_configurations()) {
    const auto dec = decompose(geom, surf);
    double mass = 0.0;
    for (const auto& n : dec.needles) mass += needle_mass(n);
    CHECK(mass == doctest::Approx(dec.total_mass).epsilon(1e-9));
    for (std::size_t i = 0; i < dec.needles.size(); ++i) {
      CHECK(check_cd_density(dec.needles[i].profile(), dec.cd, 32).pass);
      CHECK(needle_mass(Needle(dec.needles[i].profile(), 1.0)) == doctest::Approx(1.0).epsilon(1e-9));
      const auto& c = dec.curvature[i];
      CHECK(c.H == std::max(c.H_plus, -c.H_minus));
    }
    CHECK(dec.diameter == diameter(geom));
  }
}

TEST_CASE("tube volume") {
  const auto eq = decompose(RoundSphere{2, 1.0}, GeodesicSphere{pi / 2});
  for (double t : {0.1, 0.5, 1.0, pi / 2}) {
    CHECK(tube_volume(eq, t, TubeSide::outer) == doctest::Approx(2 * pi * std::sin(t)).epsilon(1e-11));
  }
  const auto ball = decompose(EuclideanBall{3, 1.0}, GeodesicSphere{0.5});
  CHECK(tube_volume(ball, 0.5, TubeSide::outer) == doctest::Approx(7 * pi / 6).epsilon(1e-11));
  CHECK(tube_volume(ball, 0.5, TubeSide::inner) == doctest::Approx(pi / 6).epsilon(1e-11));

  for (const auto& [geom, surf] : sample_configurations()) {
    const auto dec = decompose(geom, surf);
    const double D = dec.diameter;
    CHECK(tube_volume(dec, D, TubeSide::outer) + tube_volume(dec, D, TubeSide::inner) ==
          doctest::Approx(dec.total_mass).epsilon(1e-10));
    double previous = 0.0;
    for (int k = 1; k <= 20; ++k) {
      const double v = tube_volume(dec, D * k / 20.0, TubeSide::outer);
      CHECK(v + 1e-12 >= previous);
      previous = v;
    }
  }
}

TEST_CASE("Minkowski content") {
  for (double rho : {0.25, 0.5, 0.75}) {
    CHECK(minkowski_content(EuclideanBall{3, 1.0}, GeodesicSphere{rho}, {1e-3, 5e-4, 2.5e-4}) ==
          doctest::Approx(4 * pi * rho * rho).epsilon(1e-7));
  }
  CHECK(minkowski_content(RoundSphere{2, 1.0}, GeodesicSphere{pi / 2}, {1e-3, 5e-4, 2.5e-4}) ==
        doctest::Approx(2 * pi).epsilon(1e-8));
  CHECK(minkowski_content(model_interval(CurvatureDimension(1.0, 2.0)), LevelPoint{pi / 2},
                          {1e-3, 5e-4, 2.5e-4}) == doctest::Approx(1.0).epsilon(1e-8));
  for (const auto& [geom, surf] : sample_configurations()) {
    const auto dec = decompose(geom, surf);
    CHECK(minkowski_content(dec, default_minkowski_schedule(dec)) ==
          doctest::Approx(dec.surface_total).epsilon(1e-6));
  }
  const auto dec = decompose(RoundSphere{2, 1.0}, GeodesicSphere{1.0});
  CHECK_THROWS_AS(minkowski_content(dec, {1e-2, 1e-3}), ScheduleError);
  CHECK_THROWS_AS(minkowski_content(dec, {1e-3, 1e-2, 1e-4}), ScheduleError);
  CHECK_THROWS_AS(minkowski_content(dec, {1e-2, 1e-3, -1e-4}), ScheduleError);
}
