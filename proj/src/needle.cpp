#include "needlecomp/needle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "needlecomp/errors.hpp"
#include "needlecomp/format.hpp"
#include "needlecomp/quadrature.hpp"

namespace needlecomp {

namespace {

constexpr double kStepFraction = 1e-3;
constexpr int kRichardsonLevels = 8;
constexpr double kDivergenceThreshold = 1e8;

std::shared_ptr<const std::vector<double>> sample(double a, double b,
                                                  const DensityProfile::Function& eval,
                                                  std::size_t count) {
  if (count < 2) throw ParameterError("density profile needs at least 2 samples");
  auto values = std::make_shared<std::vector<double>>(count);
  const double step = (b - a) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double r = (i + 1 == count) ? b : a + step * static_cast<double>(i);
    const double v = eval(r);
    const bool endpoint = (i == 0 || i + 1 == count);
    if (!std::isfinite(v) || v < 0.0 || (!endpoint && v == 0.0)) {
      throw ParameterError("density profile not positive at r = " + format_real(r) +
                           " (value " + format_real(v) + ")");
    }
    (*values)[i] = v;
  }
  return values;
}

ExtendedReal signed_infinity(double sign) {
  return sign > 0.0 ? ExtendedReal::plus_infinity() : ExtendedReal::minus_infinity();
}

// Forward (plus) or backward (minus) difference quotient of log h, extrapolated.
ExtendedReal finite_difference_log_derivative(const DensityProfile& h, double r, Side side) {
  const double direction = side == Side::plus ? 1.0 : -1.0;
  const double room = side == Side::plus ? h.b() - r : r - h.a();
  const double h0 = std::min(kStepFraction * h.length(), room);
  const double log_center = std::log(h(r));

  std::array<double, kRichardsonLevels> raw{};
  std::array<std::array<double, kRichardsonLevels>, kRichardsonLevels> table{};
  double step = h0;
  for (int k = 0; k < kRichardsonLevels; ++k, step *= 0.5) {
    const double value = h(r + direction * step);
    if (!(value > 0.0)) return signed_infinity(-direction);
    raw[k] = (std::log(value) - log_center) / (direction * step);
    table[k][0] = raw[k];
    double factor = 1.0;
    for (int j = 1; j <= k; ++j) {
      factor *= 2.0;
      table[k][j] = table[k][j - 1] + (table[k][j - 1] - table[k - 1][j - 1]) / (factor - 1.0);
    }
  }

  const double last = raw[kRichardsonLevels - 1];
  if (std::abs(last) > kDivergenceThreshold &&
      std::abs(last) > std::abs(raw[kRichardsonLevels - 2])) {
    return signed_infinity(last);
  }

  // Keep the diagonal entry that moved least from its predecessor; deeper
  // levels start to amplify rounding error.
  double best = table[0][0];
  double best_change = std::numeric_limits<double>::infinity();
  for (int k = 1; k < kRichardsonLevels; ++k) {
    const double change = std::abs(table[k][k] - table[k - 1][k - 1]);
    if (change < best_change) {
      best_change = change;
      best = table[k][k];
    }
  }
  return best;
}

double relative_scale(double x, double y) { return std::max(std::abs(x), std::abs(y)); }

}  // namespace

DensityProfile::DensityProfile(double a, double b, Function eval, std::size_t sample_count)
    : DensityProfile(a, b, std::move(eval), OneSidedDerivative{}, sample_count) {}

DensityProfile::DensityProfile(double a, double b, Function eval, OneSidedDerivative derivative,
                               std::size_t sample_count)
    : a_(a), b_(b), eval_(std::move(eval)), derivative_(std::move(derivative)) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw ParameterError("density profile needs finite endpoints a < b");
  }
  if (!eval_) throw ParameterError("density profile needs an evaluable density");
  samples_ = sample(a_, b_, eval_, sample_count);
}

double DensityProfile::operator()(double r) const {
  if (!(r >= a_ && r <= b_)) {
    throw DomainError("density evaluated at r = " + format_real(r) + " outside [" +
                      format_real(a_) + ", " + format_real(b_) + "]");
  }
  return eval_(r);
}

double DensityProfile::derivative(double r, Side side) const {
  if (!derivative_) throw ParameterError("density profile has no closed-form derivative");
  if (!(r >= a_ && r <= b_)) {
    throw DomainError("derivative evaluated at r = " + format_real(r) + " outside profile");
  }
  return derivative_(r, side);
}

double DensityProfile::sample_position(std::size_t i) const noexcept {
  const std::size_t count = samples_->size();
  if (i + 1 >= count) return b_;
  return a_ + (b_ - a_) * static_cast<double>(i) / static_cast<double>(count - 1);
}

DensityProfile DensityProfile::shifted(double offset) const {
  Function f = [eval = eval_, offset](double r) { return eval(r + offset); };
  OneSidedDerivative df;
  if (derivative_) {
    df = [d = derivative_, offset](double r, Side s) { return d(r + offset, s); };
  }
  return DensityProfile(a_ - offset, b_ - offset, std::move(f), std::move(df), samples_->size());
}

DensityProfile DensityProfile::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw ParameterError("density scale factor must be positive and finite");
  }
  Function f = [eval = eval_, factor](double r) { return factor * eval(r); };
  OneSidedDerivative df;
  if (derivative_) {
    df = [d = derivative_, factor](double r, Side s) { return factor * d(r, s); };
  }
  return DensityProfile(a_, b_, std::move(f), std::move(df), samples_->size());
}

DensityProfile DensityProfile::reflected() const {
  Function f = [eval = eval_](double r) { return eval(-r); };
  OneSidedDerivative df;
  if (derivative_) {
    // A right derivative of r -> h(-r) is minus the left derivative of h.
    df = [d = derivative_](double r, Side s) {
      return -d(-r, s == Side::plus ? Side::minus : Side::plus);
    };
  }
  return DensityProfile(-b_, -a_, std::move(f), std::move(df), samples_->size());
}

DensityProfile DensityProfile::power(double exponent) const {
  Function f = [eval = eval_, exponent](double r) { return std::pow(eval(r), exponent); };
  OneSidedDerivative df;
  if (derivative_) {
    df = [eval = eval_, d = derivative_, exponent](double r, Side s) {
      return exponent * std::pow(eval(r), exponent - 1.0) * d(r, s);
    };
  }
  return DensityProfile(a_, b_, std::move(f), std::move(df), samples_->size());
}

Needle::Needle(DensityProfile profile, double weight)
    : profile_(std::move(profile)), weight_(weight) {
  if (!(profile_.a() <= 0.0 && profile_.b() >= 0.0)) {
    throw ParameterError("needle base point 0 must lie in [a, b]");
  }
  if (!(weight >= 0.0) || !std::isfinite(weight)) {
    throw ParameterError("needle weight must be finite and non-negative");
  }
}

ExtendedReal one_sided_log_derivative(const DensityProfile& profile, double r, Side side) {
  const bool admissible = side == Side::plus ? (r >= profile.a() && r < profile.b())
                                             : (r > profile.a() && r <= profile.b());
  if (!admissible) {
    throw DomainError("one-sided log-derivative at r = " + format_real(r) +
                      " outside the admissible range");
  }
  const double value = profile(r);
  if (!(value > 0.0)) {
    // log h = -inf at r, finite nearby.
    return side == Side::plus ? ExtendedReal::plus_infinity() : ExtendedReal::minus_infinity();
  }
  if (profile.has_closed_form_derivative()) {
    const double d = profile.derivative(r, side);
    if (!std::isfinite(d)) return signed_infinity(d);
    return d / value;
  }
  return finite_difference_log_derivative(profile, r, side);
}

CdDensityReport check_cd_density(const DensityProfile& profile, const CurvatureDimension& cd,
                                 int grid_size) {
  if (grid_size < 3) throw ParameterError("check_cd_density: grid_size must be >= 3");

  // The inequality is required along geodesics inside the open interval.
  const double exponent = 1.0 / (cd.N() - 1.0);
  const double spacing = profile.length() / (grid_size + 1);
  std::vector<double> position(grid_size);
  std::vector<double> u(grid_size);
  for (int i = 0; i < grid_size; ++i) {
    position[i] = profile.a() + spacing * (i + 1);
    u[i] = std::pow(profile(position[i]), exponent);
  }

  CdDensityReport report;
  report.worst_violation = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid_size; ++i) {
    for (int j = i + 2; j < grid_size; ++j) {
      const double theta = position[j] - position[i];
      for (int k = i + 1; k < j; ++k) {
        const double t = static_cast<double>(k - i) / static_cast<double>(j - i);
        const ExtendedReal s0 = sigma(cd.K(), cd.N() - 1.0, 1.0 - t, theta);
        const ExtendedReal s1 = sigma(cd.K(), cd.N() - 1.0, t, theta);
        double violation;
        if (!s0.is_finite() || !s1.is_finite()) {
          violation = std::numeric_limits<double>::infinity();
        } else {
          const double rhs = s0.value() * u[i] + s1.value() * u[j];
          violation = (rhs - u[k]) / u[k];
        }
        if (violation > report.worst_violation) {
          report.worst_violation = violation;
          report.witness = {position[i], position[j], t};
        }
      }
    }
  }
  report.pass = report.worst_violation <= kInequalitySlack;
  return report;
}

SturmReport sturm_bound_check(const DensityProfile& u, double kappa, double r0, int grid_size) {
  if (!(r0 > u.a() && r0 < u.b())) {
    throw DomainError("sturm_bound_check: r0 = " + format_real(r0) +
                      " outside the open interval");
  }
  if (grid_size < 1) throw ParameterError("sturm_bound_check: grid_size must be >= 1");

  const double u0 = u(r0);
  const ExtendedReal log_slope = one_sided_log_derivative(u, r0, Side::plus);
  if (!log_slope.is_finite()) {
    throw DomainError("sturm_bound_check: right derivative not finite at interior point");
  }
  const double slope = u0 * log_slope.value();

  SturmReport report;
  report.max_excess = -std::numeric_limits<double>::infinity();
  report.min_bound = std::numeric_limits<double>::infinity();
  const double spacing = (u.b() - r0) / (grid_size + 1);
  for (int i = 1; i <= grid_size; ++i) {
    const double r = r0 + spacing * i;
    const auto [s, c] = trig_kappa(kappa, r - r0);
    const double bound = u0 * c + slope * s;
    const double value = u(r);
    const double excess = value - bound;
    const double slack = kInequalitySlack * std::max(relative_scale(value, bound), u0);
    report.max_excess = std::max(report.max_excess, excess);
    report.min_bound = std::min(report.min_bound, bound);
    if (excess > slack || !(bound > -slack)) report.pass = false;
  }
  return report;
}

RatioReport density_ratio_check(const Needle& needle, const CurvatureDimension& cd,
                                int grid_size) {
  const DensityProfile& h = needle.profile();
  if (!(h.a() < 0.0 && h.b() > 0.0)) {
    throw DomainError("density_ratio_check: base point must be interior to the needle");
  }
  if (grid_size < 1) throw ParameterError("density_ratio_check: grid_size must be >= 1");

  const ExtendedReal outer = one_sided_log_derivative(h, 0.0, Side::plus);
  const ExtendedReal inner_left = one_sided_log_derivative(h, 0.0, Side::minus);
  if (!outer.is_finite() || !inner_left.is_finite()) {
    throw CurvatureError("density_ratio_check: infinite one-sided log-derivative at the base");
  }

  RatioReport report;
  report.H_used = outer.value();
  report.H_inner = -inner_left.value();
  report.max_excess = -std::numeric_limits<double>::infinity();

  const double h0 = h(0.0);
  auto check_side = [&](double H, double extent, double orientation) {
    const JacobianParams params(H, cd);
    const double spacing = extent / (grid_size + 1);
    for (int i = 1; i <= grid_size; ++i) {
      const double r = spacing * i;
      const double ratio = h(orientation * r) / h0;
      const double bound = jacobian(params, r);
      const double excess = ratio - bound;
      report.max_excess = std::max(report.max_excess, excess);
      if (excess > kInequalitySlack * relative_scale(ratio, bound)) report.pass = false;
    }
  };
  check_side(report.H_used, h.b(), 1.0);
  check_side(report.H_inner, -h.a(), -1.0);
  return report;
}

double needle_mass(const Needle& needle) {
  const DensityProfile& h = needle.profile();
  return needle.weight() * integrate([&](double r) { return h(r); }, h.a(), h.b(), {0.0});
}

double laplacian_regular_part(const Needle& needle, double r, Side side) {
  const DensityProfile& h = needle.profile();
  if (!(r > h.a() && r < h.b())) {
    throw DomainError("laplacian_regular_part: r = " + format_real(r) +
                      " outside the open needle interval");
  }
  const ExtendedReal d = one_sided_log_derivative(h, r, side);
  if (!d.is_finite()) throw CurvatureError("laplacian_regular_part: infinite log-derivative");
  return -d.value();
}

}  // namespace needlecomp
