#pragma once

#include <utility>

#include "needlecomp/extended_real.hpp"

namespace needlecomp {

/// Curvature lower bound K and dimension upper bound N, with 1 < N < inf.
class CurvatureDimension {
 public:
  /// Throws ParameterError unless K is finite and N is finite with N > 1.
  CurvatureDimension(double K, double N);

  double K() const noexcept { return K_; }
  double N() const noexcept { return N_; }

  /// K / (N - 1), the curvature of the one-dimensional comparison equation.
  double kappa() const noexcept { return K_ / (N_ - 1.0); }

  friend bool operator==(const CurvatureDimension&, const CurvatureDimension&) = default;

 private:
  double K_;
  double N_;
};

/// Mean curvature value H together with the ambient (K, N).
class JacobianParams {
 public:
  /// Throws ParameterError if H is not finite.
  JacobianParams(double H, CurvatureDimension cd);

  double H() const noexcept { return H_; }
  const CurvatureDimension& cd() const noexcept { return cd_; }

 private:
  double H_;
  CurvatureDimension cd_;
};

struct TrigKappa {
  double sin_value;
  double cos_value;
};

/// Solutions of v'' + kappa v = 0 with (v, v') = (0, 1) and (1, 0) at r = 0.
TrigKappa trig_kappa(double kappa, double r) noexcept;

inline double sin_kappa(double kappa, double r) noexcept { return trig_kappa(kappa, r).sin_value; }
inline double cos_kappa(double kappa, double r) noexcept { return trig_kappa(kappa, r).cos_value; }

/// Diameter of the simply connected model surface of curvature kappa.
ExtendedReal pi_kappa(double kappa) noexcept;

/// Distortion coefficient sigma_{K,N}^{(t)}(theta) for N > 0.
///
/// Infinite once theta reaches pi_{K/N}; sigma(t, 0) = t.
ExtendedReal sigma(double K, double N, double t, double theta);
ExtendedReal sigma(const CurvatureDimension& cd, double t, double theta);

/// Modified distortion coefficient tau_{K,N}^{(t)}(theta) for N >= 1.
ExtendedReal tau(double K, double N, double t, double theta);
ExtendedReal tau(const CurvatureDimension& cd, double t, double theta);

/// J_{H,K,N}(r) = (cos_k(r) + H/(N-1) sin_k(r))_+^{N-1}, k = K/(N-1).
double jacobian(const JacobianParams& p, double r) noexcept;

/// Maximal open interval around 0 on which the base of `jacobian` is positive.
std::pair<ExtendedReal, ExtendedReal> jacobian_support(const JacobianParams& p) noexcept;

/// K/(N-1) + (H/(N-1))^2.
double kappa_eff(const JacobianParams& p) noexcept;

/// Integral of sin_k^{N-1} over [0, pi_k] for k = K/(N-1) > 0.
double model_volume_constant(const CurvatureDimension& cd);

/// Isoperimetric profile of the model interval I_{K,N}, K > 0, v in [0, 1].
double model_profile(const CurvatureDimension& cd, double v);

/// Integral over the real line of J_{H,K,N} for K > 0, in closed form
/// kappa_eff^{(N-1)/2} * model_volume_constant.
double model_rhs_constant_H(const JacobianParams& p);

/// Area of the unit n-sphere in R^{n+1}.
double unit_sphere_area(int n);

}  // namespace needlecomp
