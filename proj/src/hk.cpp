#include "needlecomp/hk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "needlecomp/errors.hpp"
#include "needlecomp/format.hpp"
#include "needlecomp/quadrature.hpp"

namespace needlecomp {

namespace {

bool relatively_close(double x, double y, double tol) {
  return std::abs(x - y) <= tol * std::max(std::abs(x), std::abs(y));
}

// h = h(0) J_H pointwise on an open grid of (lo, hi).
bool profile_matches(const Needle& needle, const JacobianParams& p, double lo, double hi,
                     int grid, double tol) {
  if (!(lo < hi)) return true;
  const DensityProfile& h = needle.profile();
  const double h0 = h(0.0);
  const double spacing = (hi - lo) / (grid + 1);
  for (int i = 1; i <= grid; ++i) {
    const double r = lo + spacing * i;
    const double model = h0 * jacobian(p, r);
    if (std::abs(h(r) - model) > tol * h0 * std::max(1.0, model / h0)) return false;
  }
  return true;
}

HKReport finish(Statement statement, std::optional<double> t, double lhs,
                std::vector<NeedleDiagnostics> per_needle, const HKOptions& opts) {
  double rhs = 0.0;
  for (const auto& d : per_needle) rhs += d.rhs;  // fixed needle order
  HKReport report{statement, t, lhs, rhs, rhs - lhs, 0.0, false, std::move(per_needle)};
  report.relative_gap = rhs > 0.0 ? report.gap / rhs : (report.gap == 0.0 ? 0.0 : -1.0);
  if (report.gap < -opts.inequality_slack * std::abs(rhs)) {
    throw InvariantViolation(std::string(statement_tag(statement)) +
                             ": lhs exceeds rhs (lhs=" + format_real(lhs) +
                             ", rhs=" + format_real(rhs) + ")");
  }
  const bool all_match = std::all_of(report.per_needle.begin(), report.per_needle.end(),
                                     [](const NeedleDiagnostics& d) { return d.profile_match; });
  report.equality = std::abs(report.relative_gap) < opts.equality_tolerance && all_match;
  return report;
}

void require_positive_K(const NeedleDecomposition& dec, const char* what) {
  if (!(dec.cd.K() > 0.0)) {
    throw ParameterError(std::string(what) + " requires K > 0, got K = " +
                         format_real(dec.cd.K()));
  }
}

double base_integral(const Needle& needle, double lo, double hi) {
  const DensityProfile& h = needle.profile();
  return integrate([&](double r) { return h(r); }, std::max(lo, h.a()), std::min(hi, h.b()),
                   {0.0});
}

}  // namespace

std::string_view statement_tag(Statement s) noexcept {
  switch (s) {
    case Statement::hk_outer:
      return "hk-outer";
    case Statement::hk_full:
      return "hk-full";
    case Statement::corollary_constant_H:
      return "corollary-constant-H";
    case Statement::corollary_diameter:
      return "corollary-diameter";
    case Statement::corollary_positive_K:
      return "corollary-positive-K";
    case Statement::corollary_positive_K_sphere_volume:
      return "corollary-positive-K-sphere-volume";
  }
  return "unknown";
}

double integrate_jacobian(const JacobianParams& p, double lo, double hi) {
  const auto [left, right] = jacobian_support(p);
  const double a = left.is_finite() ? std::max(lo, left.value()) : lo;
  const double b = right.is_finite() ? std::min(hi, right.value()) : hi;
  return integrate([&](double r) { return jacobian(p, r); }, a, b, {0.0});
}

HKReport hk_outer(const NeedleDecomposition& dec, double t, const HKOptions& opts) {
  if (!(t > 0.0)) throw ParameterError("hk_outer: t must be positive");
  std::vector<NeedleDiagnostics> per_needle;
  for (std::size_t i = 0; i < dec.needles.size(); ++i) {
    const Needle& needle = dec.needles[i];
    const NeedleCurvature& c = dec.curvature[i];
    const JacobianParams p(c.H_plus, dec.cd);
    const double h0 = needle.profile()(0.0);
    const double lhs = needle.weight() * base_integral(needle, 0.0, t);
    const double rhs = needle.weight() * h0 * integrate_jacobian(p, 0.0, t);
    const bool match =
        relatively_close(lhs, rhs, opts.equality_tolerance) &&
        profile_matches(needle, p, 0.0, std::min(t, needle.profile().b()), opts.profile_grid,
                        opts.equality_tolerance);
    per_needle.push_back({c.H_plus, c.H_minus, c.H, lhs, rhs, match});
  }
  return finish(Statement::hk_outer, t, tube_volume(dec, t, TubeSide::outer),
                std::move(per_needle), opts);
}

HKReport hk_full(const NeedleDecomposition& dec, const HKOptions& opts) {
  const double D = dec.diameter;
  std::vector<NeedleDiagnostics> per_needle;
  for (std::size_t i = 0; i < dec.needles.size(); ++i) {
    const Needle& needle = dec.needles[i];
    const NeedleCurvature& c = dec.curvature[i];
    const JacobianParams p(c.H, dec.cd);
    const double h0 = needle.profile()(0.0);
    const double lhs = needle_mass(needle);
    const double rhs = needle.weight() * h0 * integrate_jacobian(p, -D, D);
    const bool match = relatively_close(lhs, rhs, opts.equality_tolerance) &&
                       profile_matches(needle, p, needle.profile().a(), needle.profile().b(),
                                       opts.profile_grid, opts.equality_tolerance);
    per_needle.push_back({c.H_plus, c.H_minus, c.H, lhs, rhs, match});
  }
  return finish(Statement::hk_full, std::nullopt, dec.total_mass, std::move(per_needle), opts);
}

HKReport closed_form_bound(const NeedleDecomposition& dec, CorollaryBranch branch,
                           std::optional<double> H0, const HKOptions& opts) {
  const double D = dec.diameter;
  const double n1 = dec.cd.N() - 1.0;
  double max_H = -std::numeric_limits<double>::infinity();
  for (const auto& c : dec.curvature) max_H = std::max(max_H, c.H);

  Statement statement = Statement::corollary_constant_H;
  double constant = 0.0;  // rhs per unit of surface measure, where H-independent
  switch (branch) {
    case CorollaryBranch::constant_H: {
      const double bound = H0.value_or(max_H);
      if (max_H > bound + opts.inequality_slack * std::max(1.0, std::abs(bound))) {
        throw PreconditionError("constant-H bound: mean curvature " + format_real(max_H) +
                                " exceeds H0 = " + format_real(bound));
      }
      H0 = bound;
      constant = integrate_jacobian(JacobianParams(bound, dec.cd), -D, D);
      break;
    }
    case CorollaryBranch::diameter:
      statement = Statement::corollary_diameter;
      if (dec.cd.K() < 0.0) throw PreconditionError("diameter bound requires K >= 0");
      if (max_H > opts.inequality_slack / D) {
        throw PreconditionError("diameter bound requires H <= 0, got max H = " +
                                format_real(max_H));
      }
      constant = D;
      break;
    case CorollaryBranch::positive_K:
      statement = Statement::corollary_positive_K;
      if (!(dec.cd.K() > 0.0)) throw PreconditionError("positive-K bound requires K > 0");
      constant = model_volume_constant(dec.cd);
      break;
    case CorollaryBranch::positive_K_sphere_volume: {
      statement = Statement::corollary_positive_K_sphere_volume;
      if (!(dec.cd.K() > 0.0)) throw PreconditionError("positive-K bound requires K > 0");
      const double N = dec.cd.N();
      if (std::abs(N - std::round(N)) > 1e-12) {
        throw PreconditionError("sphere-volume form requires integer N");
      }
      const int n = static_cast<int>(std::round(N));
      const double sphere = unit_sphere_area(n) * std::pow(dec.cd.kappa(), -N / 2.0);
      constant = sphere / unit_sphere_area(n - 1);
      break;
    }
  }

  const bool curvature_weighted = branch == CorollaryBranch::positive_K ||
                                  branch == CorollaryBranch::positive_K_sphere_volume;
  std::vector<NeedleDiagnostics> per_needle;
  for (std::size_t i = 0; i < dec.needles.size(); ++i) {
    const Needle& needle = dec.needles[i];
    const NeedleCurvature& c = dec.curvature[i];
    const double surface = needle.weight() * needle.profile()(0.0);
    double factor = constant;
    if (curvature_weighted) {
      factor *= std::pow(kappa_eff(JacobianParams(c.H, dec.cd)), n1 / 2.0);
    }
    const double lhs = needle_mass(needle);
    const double rhs = surface * factor;
    per_needle.push_back(
        {c.H_plus, c.H_minus, c.H, lhs, rhs, relatively_close(lhs, rhs, opts.equality_tolerance)});
  }
  return finish(statement, std::nullopt, dec.total_mass, std::move(per_needle), opts);
}

std::vector<HKReport> closed_form_bounds(const NeedleDecomposition& dec, std::optional<double> H0,
                                         const HKOptions& opts) {
  std::vector<HKReport> reports;
  for (CorollaryBranch branch :
       {CorollaryBranch::constant_H, CorollaryBranch::diameter, CorollaryBranch::positive_K,
        CorollaryBranch::positive_K_sphere_volume}) {
    try {
      reports.push_back(closed_form_bound(dec, branch, H0, opts));
    } catch (const PreconditionError&) {
      // not applicable to this configuration
    }
  }
  return reports;
}

LevyGromovReport levy_gromov_check(const NeedleDecomposition& dec, const HKOptions& opts) {
  require_positive_K(dec, "levy_gromov_check");
  LevyGromovReport report{};
  report.content = minkowski_content(dec, default_minkowski_schedule(dec)) / dec.total_mass;
  double inside = 0.0;
  for (const Needle& needle : dec.needles) {
    inside += needle.weight() * base_integral(needle, needle.profile().a(), 0.0);
  }
  report.volume_fraction = std::clamp(inside / dec.total_mass, 0.0, 1.0);
  report.profile_value = model_profile(dec.cd, report.volume_fraction);
  // The content is an extrapolated limit; its error budget is the equality tolerance.
  report.pass = report.content >= report.profile_value * (1.0 - opts.equality_tolerance);
  report.equality = relatively_close(report.content, report.profile_value,
                                     opts.equality_tolerance);
  return report;
}

RigidityReport equality_detect(const NeedleDecomposition& dec, double tolerance) {
  require_positive_K(dec, "equality_detect");
  HKOptions opts;
  opts.equality_tolerance = tolerance;
  const HKReport full = hk_full(dec, opts);

  RigidityReport report{};
  report.gap = full.gap;
  report.relative_gap = full.relative_gap;
  report.hk_equality = std::abs(full.relative_gap) < tolerance;
  report.profiles_match = true;
  report.full_span = true;

  const double model_length = pi_kappa(dec.cd.kappa()).value();
  for (std::size_t i = 0; i < dec.needles.size(); ++i) {
    const Needle& needle = dec.needles[i];
    const JacobianParams p(dec.curvature[i].H, dec.cd);
    const bool match = profile_matches(needle, p, needle.profile().a(), needle.profile().b(),
                                       opts.profile_grid, tolerance);
    const auto [left, right] = jacobian_support(p);
    const bool span = std::abs(needle.profile().a() - left.value()) <= tolerance * model_length &&
                      std::abs(needle.profile().b() - right.value()) <= tolerance * model_length;
    report.per_needle_match.push_back(match && span);
    report.profiles_match = report.profiles_match && match;
    report.full_span = report.full_span && span;
  }

  if (!report.hk_equality) report.failed.emplace_back("hk-full gap");
  if (!report.profiles_match) report.failed.emplace_back("needle profile != h(0) J");
  if (!report.full_span) report.failed.emplace_back("needle shorter than model interval");
  report.rigid = report.failed.empty();
  return report;
}

}  // namespace needlecomp
