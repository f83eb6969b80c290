#pragma once

#include <functional>
#include <initializer_list>
#include <span>

namespace needlecomp {

struct QuadratureTolerance {
  /// Target error relative to the L1 norm of the integrand.
  double relative = 1e-10;
  /// Maximum bisection depth per piece.
  unsigned max_depth = 15;
};

/// Adaptive Gauss-Kronrod integral of `f` over [a, b].
///
/// `breakpoints` inside (a, b) split the interval; integrands with kinks
/// (e.g. positive parts) must be split there to reach the tolerance.
/// Returns 0 when a >= b.
double integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> breakpoints = {},
                 QuadratureTolerance tol = {});

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        std::initializer_list<double> breakpoints,
                        QuadratureTolerance tol = {}) {
  return integrate(f, a, b, std::span<const double>(breakpoints.begin(), breakpoints.size()),
                   tol);
}

}  // namespace needlecomp
