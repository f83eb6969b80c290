#include "needlecomp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "needlecomp/errors.hpp"
#include "needlecomp/format.hpp"
#include "needlecomp/quadrature.hpp"

namespace needlecomp {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kMinkowskiRelativeStep = 1e-3;

DensityProfile sine_power_density(const CurvatureDimension& cd, double length) {
  const double kappa = cd.kappa();
  const double n1 = cd.N() - 1.0;
  auto eval = [kappa, n1](double r) {
    return std::pow(std::max(sin_kappa(kappa, r), 0.0), n1);
  };
  auto derivative = [kappa, n1](double r, Side) {
    const auto [s, c] = trig_kappa(kappa, r);
    return n1 * std::pow(std::max(s, 0.0), n1 - 1.0) * c;
  };
  return DensityProfile(0.0, length, eval, derivative);
}

// Unnormalised needle density g on [lo, hi] plus its total mass.
struct RawNeedle {
  DensityProfile density;
  double total;
};

RawNeedle raw_needle(const WeightedInterval& g, double r0) {
  const double total =
      integrate([&](double r) { return g.density(r); }, 0.0, g.length, {r0});
  return {g.density.shifted(r0), total};
}

RawNeedle raw_needle(const RoundSphere& g, double r0) {
  const double rho = g.radius;
  const double n1 = g.n - 1.0;
  const double area = unit_sphere_area(g.n - 1);
  auto eval = [=](double r) {
    return area * std::pow(std::max(rho * std::sin((r0 + r) / rho), 0.0), n1);
  };
  auto derivative = [=](double r, Side) {
    const double phase = (r0 + r) / rho;
    return area * n1 * std::pow(std::max(rho * std::sin(phase), 0.0), n1 - 1.0) *
           std::cos(phase);
  };
  const double total = unit_sphere_area(g.n) * std::pow(rho, g.n);
  return {DensityProfile(-r0, std::numbers::pi * rho - r0, eval, derivative), total};
}

RawNeedle raw_needle(const EuclideanBall& g, double r0) {
  const double n1 = g.n - 1.0;
  const double area = unit_sphere_area(g.n - 1);
  auto eval = [=](double r) { return area * std::pow(std::max(r0 + r, 0.0), n1); };
  auto derivative = [=](double r, Side) {
    return area * n1 * std::pow(std::max(r0 + r, 0.0), n1 - 1.0);
  };
  const double total = area * std::pow(g.R, g.n) / g.n;
  return {DensityProfile(-r0, g.R - r0, eval, derivative), total};
}

RawNeedle raw_needle(const SphericalSuspension& g, double r0) {
  const double length = pi_kappa(g.cd.kappa()).value();
  DensityProfile base = sine_power_density(g.cd, length).scaled(g.base_volume);
  const double total = g.base_volume * model_volume_constant(g.cd);
  return {base.shifted(r0), total};
}

void check_surface_kind(const GeometrySpec& geom, const SurfaceSpec& surf) {
  const bool interval = std::holds_alternative<WeightedInterval>(geom);
  const bool point = std::holds_alternative<LevelPoint>(surf);
  if (interval != point) {
    throw ParameterError(interval ? "weighted intervals take a level-point surface"
                                  : "rotational geometries take a geodesic-sphere surface");
  }
}

void check_surface_position(const GeometrySpec& geom, double r0) {
  const auto [lo, hi] = radial_range(geom);
  if (!std::isfinite(r0) || r0 < lo || r0 > hi) {
    throw DomainError("surface radius " + format_real(r0) + " outside radial range [" +
                      format_real(lo) + ", " + format_real(hi) + "]");
  }
  if (r0 == lo || r0 == hi) {
    if (std::holds_alternative<RoundSphere>(geom) ||
        std::holds_alternative<SphericalSuspension>(geom)) {
      throw DegenerateSurfaceError("surface touches pole");
    }
    if (std::holds_alternative<EuclideanBall>(geom) && r0 == lo) {
      throw DegenerateSurfaceError("surface collapses to the centre");
    }
    throw DegenerateSurfaceError("surface touches boundary");
  }
}

}  // namespace

WeightedInterval model_interval(const CurvatureDimension& cd) {
  if (!(cd.K() > 0.0)) throw ParameterError("model interval requires K > 0");
  const double length = pi_kappa(cd.kappa()).value();
  return {length, sine_power_density(cd, length), cd};
}

WeightedInterval sine_interval(const CurvatureDimension& cd, double length) {
  if (!(cd.K() > 0.0)) throw ParameterError("sine interval requires K > 0");
  const double full = pi_kappa(cd.kappa()).value();
  if (!(length > 0.0 && length <= full)) {
    throw ParameterError("sine interval length must lie in (0, pi_{K/(N-1)}]");
  }
  return {length, sine_power_density(cd, length), cd};
}

WeightedInterval constant_interval(const CurvatureDimension& cd, double length) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw ParameterError("interval length must be positive and finite");
  }
  DensityProfile density(0.0, length, [](double) { return 1.0; },
                         [](double, Side) { return 0.0; });
  return {length, density, cd};
}

void validate(const GeometrySpec& geom) {
  std::visit(
      Overloaded{
          [](const WeightedInterval& g) {
            if (!(g.length > 0.0) || !std::isfinite(g.length)) {
              throw ParameterError("interval length must be positive and finite");
            }
            if (g.density.a() != 0.0 || std::abs(g.density.b() - g.length) > 1e-12 * g.length) {
              throw ParameterError("interval density must be defined on [0, length]");
            }
            const ExtendedReal bound = pi_kappa(g.cd.kappa());
            if (bound.is_finite() && g.length > bound.value() * (1.0 + 1e-12)) {
              throw ParameterError("interval longer than pi_{K/(N-1)} cannot satisfy CD(K,N)");
            }
          },
          [](const RoundSphere& g) {
            if (g.n < 2) throw ParameterError("round sphere dimension must be >= 2");
            if (!(g.radius > 0.0) || !std::isfinite(g.radius)) {
              throw ParameterError("round sphere radius must be positive and finite");
            }
          },
          [](const EuclideanBall& g) {
            if (g.n < 2) throw ParameterError("euclidean ball dimension must be >= 2 (N > 1)");
            if (!(g.R > 0.0) || !std::isfinite(g.R)) {
              throw ParameterError("euclidean ball radius must be positive and finite");
            }
          },
          [](const SphericalSuspension& g) {
            if (!(g.cd.K() > 0.0)) throw ParameterError("spherical suspension requires K > 0");
            if (!(g.base_volume > 0.0) || !std::isfinite(g.base_volume)) {
              throw ParameterError("spherical suspension base volume must be positive");
            }
          },
      },
      geom);
}

CurvatureDimension geometry_cd(const GeometrySpec& geom) {
  return std::visit(
      Overloaded{
          [](const WeightedInterval& g) { return g.cd; },
          [](const RoundSphere& g) {
            return CurvatureDimension((g.n - 1.0) / (g.radius * g.radius), g.n);
          },
          [](const EuclideanBall& g) { return CurvatureDimension(0.0, g.n); },
          [](const SphericalSuspension& g) { return g.cd; },
      },
      geom);
}

std::pair<double, double> radial_range(const GeometrySpec& geom) {
  return std::visit(
      Overloaded{
          [](const WeightedInterval& g) { return std::pair{0.0, g.length}; },
          [](const RoundSphere& g) { return std::pair{0.0, std::numbers::pi * g.radius}; },
          [](const EuclideanBall& g) { return std::pair{0.0, g.R}; },
          [](const SphericalSuspension& g) {
            return std::pair{0.0, pi_kappa(g.cd.kappa()).value()};
          },
      },
      geom);
}

double diameter(const GeometrySpec& geom) {
  return std::visit(
      Overloaded{
          [](const WeightedInterval& g) { return g.length; },
          [](const RoundSphere& g) { return std::numbers::pi * g.radius; },
          [](const EuclideanBall& g) { return 2.0 * g.R; },
          [](const SphericalSuspension& g) { return pi_kappa(g.cd.kappa()).value(); },
      },
      geom);
}

std::string describe(const GeometrySpec& geom) {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const WeightedInterval& g) {
                   os << "weighted-interval(length=" << g.length << ", K=" << g.cd.K()
                      << ", N=" << g.cd.N() << ")";
                 },
                 [&](const RoundSphere& g) {
                   os << "round-sphere(n=" << g.n << ", radius=" << g.radius << ")";
                 },
                 [&](const EuclideanBall& g) {
                   os << "euclidean-ball(n=" << g.n << ", R=" << g.R << ")";
                 },
                 [&](const SphericalSuspension& g) {
                   os << "spherical-suspension(K=" << g.cd.K() << ", N=" << g.cd.N()
                      << ", base_volume=" << g.base_volume << ")";
                 },
             },
             geom);
  return os.str();
}

double surface_radius(const SurfaceSpec& surf) noexcept {
  return std::visit([](const auto& s) { return s.r0; }, surf);
}

double signed_distance(const GeometrySpec& geom, const SurfaceSpec& surf, double x) {
  const auto [lo, hi] = radial_range(geom);
  if (!(x >= lo && x <= hi)) {
    throw DomainError("radial coordinate " + format_real(x) + " outside [" +
                      format_real(lo) + ", " + format_real(hi) + "]");
  }
  return x - surface_radius(surf);
}

void validate_surface(const GeometrySpec& geom, const SurfaceSpec& surf) {
  check_surface_kind(geom, surf);
  check_surface_position(geom, surface_radius(surf));
}

NeedleDecomposition decompose(const GeometrySpec& geom, const SurfaceSpec& surf) {
  validate(geom);
  validate_surface(geom, surf);
  const double r0 = surface_radius(surf);

  RawNeedle raw = std::visit([r0](const auto& g) { return raw_needle(g, r0); }, geom);
  const double base_value = raw.density(0.0);

  NeedleDecomposition dec{
      .needles = {Needle(raw.density.scaled(1.0 / raw.total), raw.total)},
      .total_mass = raw.total,
      .diameter = diameter(geom),
      .cd = geometry_cd(geom),
      .surface_total = base_value,
      .curvature = {},
  };
  dec.curvature = mean_curvature_field(dec);
  return dec;
}

std::vector<NeedleCurvature> mean_curvature_field(const NeedleDecomposition& dec) {
  std::vector<NeedleCurvature> field;
  field.reserve(dec.needles.size());
  for (const Needle& needle : dec.needles) {
    const DensityProfile& h = needle.profile();
    if (!(h.a() < 0.0 && h.b() > 0.0)) {
      throw DegenerateSurfaceError("needle base point on the needle boundary");
    }
    const ExtendedReal right = one_sided_log_derivative(h, 0.0, Side::plus);
    const ExtendedReal left = one_sided_log_derivative(h, 0.0, Side::minus);
    if (!right.is_finite() || !left.is_finite()) {
      throw CurvatureError("infinite mean curvature at a surface point");
    }
    const double h_plus = right.value();
    const double h_minus = -left.value();
    field.push_back({h_plus, h_minus, std::max(h_plus, -h_minus)});
  }
  return field;
}

double tube_volume(const NeedleDecomposition& dec, double t, TubeSide side) {
  if (!(t > 0.0)) throw ParameterError("tube radius must be positive");
  double volume = 0.0;
  for (const Needle& needle : dec.needles) {
    const DensityProfile& h = needle.profile();
    const double lo = side == TubeSide::outer ? 0.0 : std::max(h.a(), -t);
    const double hi = side == TubeSide::outer ? std::min(h.b(), t) : 0.0;
    volume += needle.weight() * integrate([&](double r) { return h(r); }, lo, hi);
  }
  return volume;
}

double minkowski_content(const NeedleDecomposition& dec, const std::vector<double>& epsilons) {
  if (epsilons.size() < 3) throw ScheduleError("minkowski_content needs at least 3 radii");
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0.0) || (i > 0 && !(epsilons[i] < epsilons[i - 1]))) {
      throw ScheduleError("minkowski_content radii must be positive and strictly decreasing");
    }
  }
  // Quadratic extrapolation to eps = 0 through the three smallest radii.
  const std::size_t n = epsilons.size();
  const double x[3] = {epsilons[n - 3], epsilons[n - 2], epsilons[n - 1]};
  double y[3];
  for (int i = 0; i < 3; ++i) y[i] = tube_volume(dec, x[i], TubeSide::outer) / x[i];
  double limit = 0.0;
  for (int i = 0; i < 3; ++i) {
    double weight = 1.0;
    for (int j = 0; j < 3; ++j) {
      if (j != i) weight *= x[j] / (x[j] - x[i]);
    }
    limit += weight * y[i];
  }
  return limit;
}

double minkowski_content(const GeometrySpec& geom, const SurfaceSpec& surf,
                         const std::vector<double>& epsilons) {
  return minkowski_content(decompose(geom, surf), epsilons);
}

std::vector<double> default_minkowski_schedule(const NeedleDecomposition& dec) {
  double extent = dec.diameter;
  for (const Needle& needle : dec.needles) extent = std::min(extent, needle.profile().b());
  const double eps = kMinkowskiRelativeStep * extent;
  return {eps, eps / 2.0, eps / 4.0};
}

}  // namespace needlecomp
