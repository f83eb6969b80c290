#include "needlecomp/model1d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "needlecomp/errors.hpp"
#include "needlecomp/format.hpp"
#include "needlecomp/quadrature.hpp"

namespace needlecomp {

namespace {

constexpr double kBisectionWidth = 1e-12;

void check_distortion_args(double t, double theta) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw ParameterError("distortion coefficient: t = " + format_real(t) +
                         " outside [0, 1]");
  }
  if (!(theta >= 0.0)) {
    throw ParameterError("distortion coefficient: theta = " + format_real(theta) +
                         " is negative");
  }
}

void require_positive_K(const CurvatureDimension& cd, const char* what) {
  if (!(cd.K() > 0.0)) {
    throw ParameterError(std::string(what) + " requires K > 0, got K = " +
                         format_real(cd.K()));
  }
}

}  // namespace

CurvatureDimension::CurvatureDimension(double K, double N) : K_(K), N_(N) {
  if (!std::isfinite(K)) throw ParameterError("curvature bound K must be finite");
  if (!std::isfinite(N) || !(N > 1.0)) {
    throw ParameterError("dimension bound N must be finite and > 1, got " + format_real(N));
  }
}

JacobianParams::JacobianParams(double H, CurvatureDimension cd) : H_(H), cd_(cd) {
  if (!std::isfinite(H)) throw ParameterError("mean curvature H must be finite");
}

TrigKappa trig_kappa(double kappa, double r) noexcept {
  if (kappa > 0.0) {
    const double s = std::sqrt(kappa);
    return {std::sin(s * r) / s, std::cos(s * r)};
  }
  if (kappa < 0.0) {
    const double s = std::sqrt(-kappa);
    return {std::sinh(s * r) / s, std::cosh(s * r)};
  }
  return {r, 1.0};
}

ExtendedReal pi_kappa(double kappa) noexcept {
  if (kappa <= 0.0) return ExtendedReal::plus_infinity();
  return std::numbers::pi / std::sqrt(kappa);
}

ExtendedReal sigma(double K, double N, double t, double theta) {
  check_distortion_args(t, theta);
  if (!(N > 0.0)) throw ParameterError("distortion coefficient: N must be > 0");
  if (theta == 0.0) return t;
  const double kappa = K / N;
  const ExtendedReal diameter = pi_kappa(kappa);
  if (!(ExtendedReal(theta) < diameter)) return ExtendedReal::plus_infinity();
  return sin_kappa(kappa, t * theta) / sin_kappa(kappa, theta);
}

ExtendedReal sigma(const CurvatureDimension& cd, double t, double theta) {
  return sigma(cd.K(), cd.N(), t, theta);
}

ExtendedReal tau(double K, double N, double t, double theta) {
  check_distortion_args(t, theta);
  if (!(N >= 1.0)) throw ParameterError("modified distortion coefficient: N must be >= 1");
  if (N == 1.0) {
    if (K > 0.0) return ExtendedReal::plus_infinity().times_nonnegative(theta);
    return t;
  }
  const ExtendedReal s = sigma(K, N - 1.0, t, theta);
  if (!s.is_finite()) return s.times_nonnegative(std::pow(t, 1.0 / N));
  return std::pow(t, 1.0 / N) * std::pow(s.value(), 1.0 - 1.0 / N);
}

ExtendedReal tau(const CurvatureDimension& cd, double t, double theta) {
  return tau(cd.K(), cd.N(), t, theta);
}

double jacobian(const JacobianParams& p, double r) noexcept {
  const double n1 = p.cd().N() - 1.0;
  const auto [s, c] = trig_kappa(p.cd().kappa(), r);
  const double base = c + (p.H() / n1) * s;
  if (!(base > 0.0)) return 0.0;
  return std::pow(base, n1);
}

std::pair<ExtendedReal, ExtendedReal> jacobian_support(const JacobianParams& p) noexcept {
  const double kappa = p.cd().kappa();
  const double slope = p.H() / (p.cd().N() - 1.0);
  const auto inf = ExtendedReal::plus_infinity();
  const auto minus_inf = ExtendedReal::minus_infinity();

  if (kappa > 0.0) {
    // cos(s r) + (slope/s) sin(s r) = R cos(s r - phase)
    const double s = std::sqrt(kappa);
    const double phase = std::atan(slope / s);
    const double half = std::numbers::pi / 2.0;
    return {(phase - half) / s, (phase + half) / s};
  }
  if (kappa == 0.0) {
    if (slope > 0.0) return {-1.0 / slope, inf};
    if (slope < 0.0) return {minus_inf, -1.0 / slope};
    return {minus_inf, inf};
  }
  const double s = std::sqrt(-kappa);
  const double d = slope / s;
  if (d > 1.0) return {-std::atanh(1.0 / d) / s, inf};
  if (d < -1.0) return {minus_inf, std::atanh(-1.0 / d) / s};
  return {minus_inf, inf};
}

double kappa_eff(const JacobianParams& p) noexcept {
  const double n1 = p.cd().N() - 1.0;
  const double slope = p.H() / n1;
  return p.cd().K() / n1 + slope * slope;
}

double model_volume_constant(const CurvatureDimension& cd) {
  require_positive_K(cd, "model_volume_constant");
  const double kappa = cd.kappa();
  const double n1 = cd.N() - 1.0;
  const double length = pi_kappa(kappa).value();
  return integrate([&](double r) { return std::pow(std::max(sin_kappa(kappa, r), 0.0), n1); },
                   0.0, length, {length / 2.0});
}

double model_profile(const CurvatureDimension& cd, double v) {
  require_positive_K(cd, "model_profile");
  if (!(v >= 0.0 && v <= 1.0)) {
    throw ParameterError("model_profile: v = " + format_real(v) + " outside [0, 1]");
  }
  if (v == 0.0 || v == 1.0) return 0.0;

  const double kappa = cd.kappa();
  const double n1 = cd.N() - 1.0;
  const double length = pi_kappa(kappa).value();
  const double total = model_volume_constant(cd);
  auto density = [&](double r) { return std::pow(std::max(sin_kappa(kappa, r), 0.0), n1); };

  // I(v) = I(1 - v); inverting for the smaller mass keeps the bracket
  // [0, length] strictly sign-changing.
  const double w = std::min(v, 1.0 - v);
  auto excess = [&](double t) { return integrate(density, 0.0, t) / total - w; };
  auto width_reached = [](double lo, double hi) { return hi - lo <= kBisectionWidth; };
  const auto [lo, hi] =
      boost::math::tools::bisect(excess, 0.0, length, width_reached);
  return density(0.5 * (lo + hi)) / total;
}

double model_rhs_constant_H(const JacobianParams& p) {
  require_positive_K(p.cd(), "model_rhs_constant_H");
  return std::pow(kappa_eff(p), (p.cd().N() - 1.0) / 2.0) * model_volume_constant(p.cd());
}

double unit_sphere_area(int n) {
  if (n < 0) throw ParameterError("unit_sphere_area: negative dimension");
  const double half = (n + 1) / 2.0;
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

}  // namespace needlecomp
