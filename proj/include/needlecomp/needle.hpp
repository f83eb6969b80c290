#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "needlecomp/extended_real.hpp"
#include "needlecomp/model1d.hpp"

namespace needlecomp {

enum class Side { plus, minus };

/// Positive density on [a, b] with cached samples on a uniform grid.
///
/// Immutable after construction; copies share the closure and the samples.
/// A closed-form one-sided derivative of the density may be registered, in
/// which case log-derivatives use it instead of finite differences.
class DensityProfile {
 public:
  using Function = std::function<double(double)>;
  using OneSidedDerivative = std::function<double(double, Side)>;

  static constexpr std::size_t kDefaultSamples = 1024;

  /// Throws ParameterError unless a < b, the density is finite and >= 0 at the
  /// endpoints and > 0 at every interior sample.
  DensityProfile(double a, double b, Function eval, std::size_t sample_count = kDefaultSamples);
  DensityProfile(double a, double b, Function eval, OneSidedDerivative derivative,
                 std::size_t sample_count = kDefaultSamples);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double length() const noexcept { return b_ - a_; }

  /// Density at r; throws DomainError outside [a, b].
  double operator()(double r) const;

  bool has_closed_form_derivative() const noexcept { return static_cast<bool>(derivative_); }
  /// One-sided derivative of the density; requires a registered closed form.
  double derivative(double r, Side side) const;

  std::span<const double> samples() const noexcept { return *samples_; }
  double sample_position(std::size_t i) const noexcept;

  /// r -> h(r + offset) on [a - offset, b - offset].
  DensityProfile shifted(double offset) const;
  /// r -> factor * h(r), factor > 0.
  DensityProfile scaled(double factor) const;
  /// r -> h(-r) on [-b, -a].
  DensityProfile reflected() const;
  /// r -> h(r)^exponent.
  DensityProfile power(double exponent) const;

 private:
  double a_;
  double b_;
  Function eval_;
  OneSidedDerivative derivative_;
  std::shared_ptr<const std::vector<double>> samples_;
};

/// One transport ray through the surface, parametrised so the crossing is at 0.
class Needle {
 public:
  /// Throws ParameterError unless a <= 0 <= b and weight >= 0.
  Needle(DensityProfile profile, double weight);

  const DensityProfile& profile() const noexcept { return profile_; }
  double weight() const noexcept { return weight_; }

 private:
  DensityProfile profile_;
  double weight_;
};

/// d^{+/-}/dr log h at r.
///
/// Uses the registered closed form when present; otherwise one-sided finite
/// differences with Richardson extrapolation. Returns an infinity when the
/// density vanishes at r or the quotients diverge.
ExtendedReal one_sided_log_derivative(const DensityProfile& profile, double r, Side side);

struct CdDensityWitness {
  double r0 = 0.0;
  double r1 = 0.0;
  double t = 0.0;
};

struct CdDensityReport {
  bool pass = true;
  /// Largest (rhs - lhs) / lhs over all checked triples; <= 0 means no violation.
  double worst_violation = 0.0;
  CdDensityWitness witness;
};

/// Brute-force check that h^{1/(N-1)} is sigma_{K,N-1}-concave on an interior grid.
CdDensityReport check_cd_density(const DensityProfile& profile, const CurvatureDimension& cd,
                                 int grid_size = 48);

struct SturmReport {
  bool pass = true;
  /// Largest u(r) - bound(r); <= 0 when the comparison holds.
  double max_excess = 0.0;
  /// Smallest value of the comparison bound on the grid.
  double min_bound = 0.0;
};

/// Checks u(r) <= u(r0) cos_k(r - r0) + u'_+(r0) sin_k(r - r0) on (r0, b).
SturmReport sturm_bound_check(const DensityProfile& u, double kappa, double r0,
                              int grid_size = 64);

struct RatioReport {
  bool pass = true;
  /// d+ log h(0), used for the outer side.
  double H_used = 0.0;
  /// -d- log h(0), used for the reflected inner side.
  double H_inner = 0.0;
  /// Largest h(r)/h(0) - J(r) over both sides.
  double max_excess = 0.0;
};

/// Checks h(r)/h(0) <= J_{H,K,N}(r) on (0, b) and the reflected bound on (a, 0).
RatioReport density_ratio_check(const Needle& needle, const CurvatureDimension& cd,
                                int grid_size = 64);

/// weight * integral of h over [a, b].
double needle_mass(const Needle& needle);

/// -(log h)'(r), the absolutely continuous part of the Laplacian of the
/// signed distance along the needle.
double laplacian_regular_part(const Needle& needle, double r, Side side = Side::plus);

/// Relative slack for inequality checks and tolerance for equality checks.
inline constexpr double kInequalitySlack = 1e-9;
inline constexpr double kEqualityTolerance = 1e-8;

}  // namespace needlecomp
