#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "needlecomp/geometry.hpp"

namespace needlecomp {

/// Which bound a report evaluates.
enum class Statement {
  hk_outer,
  hk_full,
  corollary_constant_H,
  corollary_diameter,
  corollary_positive_K,
  corollary_positive_K_sphere_volume,
};

std::string_view statement_tag(Statement s) noexcept;

struct HKOptions {
  /// Relative gap under which a bound counts as attained.
  double equality_tolerance = kEqualityTolerance;
  /// Relative slack absorbing round-off when asserting lhs <= rhs.
  double inequality_slack = kInequalitySlack;
  /// Grid used to compare needle densities with h(0) J.
  int profile_grid = 64;
};

struct NeedleDiagnostics {
  double H_plus;
  double H_minus;
  double H;
  /// This needle's share of lhs and rhs.
  double lhs;
  double rhs;
  /// The needle attains its bound: h = h(0) J on the integration range.
  bool profile_match;
};

struct HKReport {
  Statement statement;
  std::optional<double> t;
  double lhs;
  double rhs;
  double gap;
  double relative_gap;
  /// relative_gap below tolerance and every needle attains its bound.
  bool equality;
  std::vector<NeedleDiagnostics> per_needle;
};

/// m(S_t^+) against the integral of J_{H+,K,N} over [0, t] against m_S.
/// Throws InvariantViolation if lhs exceeds rhs beyond slack.
HKReport hk_outer(const NeedleDecomposition& dec, double t, const HKOptions& opts = {});

/// m(X) against the integral of J_{H,K,N} over [-D, D] against m_S.
HKReport hk_full(const NeedleDecomposition& dec, const HKOptions& opts = {});

enum class CorollaryBranch {
  /// m(X) <= m_S(S) * int_{[-D,D]} J_{H0,K,N}, given H <= H0.
  constant_H,
  /// m(X) <= D * m_S(S), given K >= 0 and H <= 0.
  diameter,
  /// m(X) <= int_0^{pi_k} sin_k^{N-1} * int kappa_eff(H)^{(N-1)/2} dm_S, given K > 0.
  positive_K,
  /// Same bound with the constant written as vol(S^N_k) / vol(S^{N-1}_1); integer N.
  positive_K_sphere_volume,
};

/// Evaluates one corollary bound; throws PreconditionError when it does not apply.
/// Without H0 the constant-H branch uses the largest needle H.
HKReport closed_form_bound(const NeedleDecomposition& dec, CorollaryBranch branch,
                           std::optional<double> H0 = {}, const HKOptions& opts = {});

/// Every corollary bound whose preconditions hold.
std::vector<HKReport> closed_form_bounds(const NeedleDecomposition& dec,
                                         std::optional<double> H0 = {},
                                         const HKOptions& opts = {});

struct LevyGromovReport {
  /// Normalised outer Minkowski content of Omega.
  double content;
  /// Normalised measure of Omega.
  double volume_fraction;
  double profile_value;
  bool pass;
  bool equality;
};

/// Compares the normalised perimeter of Omega with the model profile, K > 0.
LevyGromovReport levy_gromov_check(const NeedleDecomposition& dec, const HKOptions& opts = {});

struct RigidityReport {
  bool rigid;
  bool hk_equality;
  bool profiles_match;
  bool full_span;
  std::vector<bool> per_needle_match;
  double gap;
  double relative_gap;
  /// Names of the failed conditions, empty when rigid.
  std::vector<std::string> failed;
};

/// Detects the equality configuration of the full bound, K > 0.
RigidityReport equality_detect(const NeedleDecomposition& dec,
                               double tolerance = kEqualityTolerance);

/// Integral of J_{H,K,N} over [lo, hi] clipped to its support.
double integrate_jacobian(const JacobianParams& p, double lo, double hi);

}  // namespace needlecomp
