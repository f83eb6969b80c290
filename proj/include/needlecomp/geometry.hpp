#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "needlecomp/model1d.hpp"
#include "needlecomp/needle.hpp"

namespace needlecomp {

/// Interval [0, length] with a density; the surface is a point of it.
struct WeightedInterval {
  double length;
  DensityProfile density;
  CurvatureDimension cd;
};

/// Round n-sphere of the given radius; CD((n-1)/radius^2, n).
struct RoundSphere {
  int n;
  double radius;
};

/// Closed ball of radius R in R^n with Lebesgue measure; CD(0, n).
struct EuclideanBall {
  int n;
  double R;
};

/// I_{K,N} warped over a fibre known only through its total measure.
struct SphericalSuspension {
  CurvatureDimension cd;
  double base_volume;
};

using GeometrySpec = std::variant<WeightedInterval, RoundSphere, EuclideanBall, SphericalSuspension>;

/// S = {r0}, Omega = [0, r0]. Surfaces of weighted intervals.
struct LevelPoint {
  double r0;
};

/// Distance sphere of radius r0 about the pole or centre; Omega is the closed ball.
struct GeodesicSphere {
  double r0;
};

using SurfaceSpec = std::variant<LevelPoint, GeodesicSphere>;

/// The model interval I_{K,N} = ([0, pi_k], sin_k^{N-1} dr), K > 0.
WeightedInterval model_interval(const CurvatureDimension& cd);
/// ([0, length], sin_k^{N-1} dr) for 0 < length <= pi_k; truncations of I_{K,N}.
WeightedInterval sine_interval(const CurvatureDimension& cd, double length);
/// ([0, length], dr); CD(K, N) only for K <= 0.
WeightedInterval constant_interval(const CurvatureDimension& cd, double length);

/// Throws ParameterError for inconsistent parameters.
void validate(const GeometrySpec& geom);

CurvatureDimension geometry_cd(const GeometrySpec& geom);
/// Range [lo, hi] of the radial coordinate.
std::pair<double, double> radial_range(const GeometrySpec& geom);
double diameter(const GeometrySpec& geom);
std::string describe(const GeometrySpec& geom);
double surface_radius(const SurfaceSpec& surf) noexcept;

/// Throws unless the surface kind suits the geometry and r0 lies strictly
/// inside the radial range (DegenerateSurfaceError when it sits on an end).
void validate_surface(const GeometrySpec& geom, const SurfaceSpec& surf);

struct NeedleCurvature {
  double H_plus;
  double H_minus;
  double H;
};

struct NeedleDecomposition {
  std::vector<Needle> needles;
  double total_mass;
  double diameter;
  CurvatureDimension cd;
  double surface_total;
  std::vector<NeedleCurvature> curvature;
};

/// Radial coordinate minus r0: negative inside Omega, zero on S.
double signed_distance(const GeometrySpec& geom, const SurfaceSpec& surf, double x);

/// Closed-form needle decomposition of the measure along the signed distance to S.
///
/// All needles through a geodesic sphere are congruent, so a single
/// representative carries the whole quotient mass as its weight. Needle
/// densities are probability densities.
NeedleDecomposition decompose(const GeometrySpec& geom, const SurfaceSpec& surf);

/// H+ = d+ log h(0), H- = -d- log h(0), H = max(H+, -H-) per needle.
std::vector<NeedleCurvature> mean_curvature_field(const NeedleDecomposition& dec);

enum class TubeSide { outer, inner };

/// Measure of the one-sided t-neighbourhood of S.
double tube_volume(const NeedleDecomposition& dec, double t, TubeSide side);

/// Outer Minkowski content extrapolated from tube_volume(eps)/eps on a
/// decreasing schedule (at least 3 radii).
double minkowski_content(const NeedleDecomposition& dec, const std::vector<double>& epsilons);
double minkowski_content(const GeometrySpec& geom, const SurfaceSpec& surf,
                         const std::vector<double>& epsilons);

/// eps, eps/2, eps/4 with eps a thousandth of the shortest outer needle extent.
std::vector<double> default_minkowski_schedule(const NeedleDecomposition& dec);

}  // namespace needlecomp
