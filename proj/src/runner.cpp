#include "needlecomp/runner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "needlecomp/errors.hpp"

namespace needlecomp {

namespace {

constexpr int kSturmBasePoints = 10;
constexpr int kSeriesPoints = 129;
constexpr double kMinkowskiTolerance = 1e-6;

class Runner {
 public:
  Runner(const ExperimentConfig& config, RunRecord& record)
      : config_(config), record_(record), dec_(decompose(config.geometry, config.surface)) {}

  void summarize() {
    auto& s = record_.summary;
    s.emplace_back("K", format_real(dec_.cd.K()));
    s.emplace_back("N", format_real(dec_.cd.N()));
    s.emplace_back("total mass", format_real(dec_.total_mass));
    s.emplace_back("surface measure", format_real(dec_.surface_total));
    s.emplace_back("diameter", format_real(dec_.diameter));
    for (std::size_t i = 0; i < dec_.curvature.size(); ++i) {
      const auto& c = dec_.curvature[i];
      s.emplace_back("needle " + std::to_string(i) + " H+/H-/H",
                     format_real(c.H_plus) + " / " + format_real(c.H_minus) + " / " +
                         format_real(c.H));
    }
  }

  void execute(CheckKind check) {
    CheckResult result{check, true, {}, {}};
    try {
      switch (check) {
        case CheckKind::cd_density:
          cd_density(result);
          break;
        case CheckKind::sturm:
          sturm(result);
          break;
        case CheckKind::ratio:
          ratio(result);
          break;
        case CheckKind::hk_outer:
          outer(result);
          break;
        case CheckKind::hk_full:
          full(result);
          break;
        case CheckKind::corollaries:
          corollaries(result);
          break;
        case CheckKind::levy_gromov:
          levy_gromov(result);
          break;
        case CheckKind::rigidity:
          rigidity(result);
          break;
        case CheckKind::minkowski:
          minkowski(result);
          break;
      }
    } catch (const Error& e) {
      result.pass = false;
      result.error = e.what();
      fail(check, e.what());
    }
    record_.checks.push_back(std::move(result));
  }

  void check_expectation() {
    if (config_.expect == Expectation::none) return;
    const bool wanted = config_.expect == Expectation::rigid;
    try {
      if (!rigidity_) rigidity_ = equality_detect(dec_, config_.tolerances.equality_tolerance);
      if (rigidity_->rigid != wanted) {
        fail(CheckKind::rigidity, std::string("expected ") + (wanted ? "rigid" : "not rigid") +
                                      ", got " + (rigidity_->rigid ? "rigid" : "not rigid"));
      }
    } catch (const Error& e) {
      fail(CheckKind::rigidity, e.what());
    }
  }

 private:
  void fail(CheckKind check, const std::string& reason) {
    record_.failures.push_back({std::string(check_name(check)), reason});
  }

  void mandate(CheckResult& result, bool ok, const std::string& reason) {
    if (ok) return;
    result.pass = false;
    fail(result.check, reason);
  }

  void cd_density(CheckResult& result) {
    for (std::size_t i = 0; i < dec_.needles.size(); ++i) {
      const auto r = check_cd_density(dec_.needles[i].profile(), dec_.cd, config_.grid);
      const std::string tag = "needle " + std::to_string(i);
      result.fields.emplace_back(tag + " worst_violation", format_real(r.worst_violation));
      result.fields.emplace_back(tag + " witness (r0, r1, t)",
                                 format_real(r.witness.r0) + ", " + format_real(r.witness.r1) +
                                     ", " + format_real(r.witness.t));
      mandate(result, r.pass, tag + " violates the CD density inequality");
    }
  }

  void sturm(CheckResult& result) {
    const double kappa = dec_.cd.kappa();
    for (std::size_t i = 0; i < dec_.needles.size(); ++i) {
      const DensityProfile u = dec_.needles[i].profile().power(1.0 / (dec_.cd.N() - 1.0));
      double worst = -std::numeric_limits<double>::infinity();
      bool ok = true;
      for (int j = 1; j <= kSturmBasePoints; ++j) {
        const double r0 = u.a() + u.length() * j / (kSturmBasePoints + 1);
        const auto r = sturm_bound_check(u, kappa, r0, config_.grid);
        worst = std::max(worst, r.max_excess);
        ok = ok && r.pass;
      }
      const std::string tag = "needle " + std::to_string(i);
      result.fields.emplace_back(tag + " max_excess", format_real(worst));
      mandate(result, ok, tag + " exceeds the Sturm comparison bound");
    }
  }

  void ratio(CheckResult& result) {
    for (std::size_t i = 0; i < dec_.needles.size(); ++i) {
      const auto r = density_ratio_check(dec_.needles[i], dec_.cd, config_.grid);
      const std::string tag = "needle " + std::to_string(i);
      result.fields.emplace_back(tag + " H_used", format_real(r.H_used));
      result.fields.emplace_back(tag + " max_excess", format_real(r.max_excess));
      mandate(result, r.pass, tag + " density ratio exceeds J");
    }
  }

  void add_report_fields(CheckResult& result, const HKReport& r) {
    std::string prefix(statement_tag(r.statement));
    if (r.t) prefix += " t=" + format_real(*r.t);
    result.fields.emplace_back(prefix + " lhs", format_real(r.lhs));
    result.fields.emplace_back(prefix + " rhs", format_real(r.rhs));
    result.fields.emplace_back(prefix + " relative_gap", format_real(r.relative_gap));
    result.fields.emplace_back(prefix + " equality", r.equality ? "true" : "false");
  }

  void outer(CheckResult& result) {
    PlotSeries lhs{"hk-outer lhs", "t", "lhs", {}};
    PlotSeries rhs{"hk-outer rhs", "t", "rhs", {}};
    for (double t : config_.t_values) {
      HKReport r = hk_outer(dec_, t, config_.tolerances);
      add_report_fields(result, r);
      lhs.points.emplace_back(t, r.lhs);
      rhs.points.emplace_back(t, r.rhs);
      record_.reports.push_back(std::move(r));
    }
    if (config_.t_values.empty()) result.fields.emplace_back("t_values", "(none)");
    record_.series.push_back(std::move(lhs));
    record_.series.push_back(std::move(rhs));
  }

  void full(CheckResult& result) {
    HKReport r = hk_full(dec_, config_.tolerances);
    add_report_fields(result, r);
    record_.reports.push_back(std::move(r));
    add_needle_series();
  }

  void corollaries(CheckResult& result) {
    auto reports = closed_form_bounds(dec_, config_.H0, config_.tolerances);
    if (reports.empty()) result.fields.emplace_back("applicable", "none");
    for (HKReport& r : reports) {
      add_report_fields(result, r);
      record_.reports.push_back(std::move(r));
    }
  }

  void levy_gromov(CheckResult& result) {
    const auto r = levy_gromov_check(dec_, config_.tolerances);
    result.fields.emplace_back("content", format_real(r.content));
    result.fields.emplace_back("volume_fraction", format_real(r.volume_fraction));
    result.fields.emplace_back("profile_value", format_real(r.profile_value));
    result.fields.emplace_back("equality", r.equality ? "true" : "false");
    mandate(result, r.pass, "normalised content below the model profile");

    PlotSeries profile{"model profile", "v", "I(v)", {}};
    for (int i = 0; i <= 50; ++i) {
      const double v = i / 50.0;
      profile.points.emplace_back(v, model_profile(dec_.cd, v));
    }
    record_.series.push_back(std::move(profile));
    record_.series.push_back({"configuration", "v", "content", {{r.volume_fraction, r.content}}});
  }

  void rigidity(CheckResult& result) {
    rigidity_ = equality_detect(dec_, config_.tolerances.equality_tolerance);
    result.fields.emplace_back("rigid", rigidity_->rigid ? "true" : "false");
    result.fields.emplace_back("hk_equality", rigidity_->hk_equality ? "true" : "false");
    result.fields.emplace_back("profiles_match", rigidity_->profiles_match ? "true" : "false");
    result.fields.emplace_back("full_span", rigidity_->full_span ? "true" : "false");
    result.fields.emplace_back("relative_gap", format_real(rigidity_->relative_gap));
    for (const auto& f : rigidity_->failed) result.fields.emplace_back("failed", f);
    add_needle_series();
  }

  void minkowski(CheckResult& result) {
    const double content = minkowski_content(dec_, default_minkowski_schedule(dec_));
    const double rel = std::abs(content - dec_.surface_total) / dec_.surface_total;
    result.fields.emplace_back("content", format_real(content));
    result.fields.emplace_back("surface_total", format_real(dec_.surface_total));
    result.fields.emplace_back("relative_difference", format_real(rel));
    mandate(result, rel <= kMinkowskiTolerance, "Minkowski content disagrees with m_S(S)");
  }

  void add_needle_series() {
    if (needle_series_added_) return;
    needle_series_added_ = true;
    for (std::size_t i = 0; i < dec_.needles.size(); ++i) {
      const DensityProfile& h = dec_.needles[i].profile();
      const JacobianParams p(dec_.curvature[i].H, dec_.cd);
      const double h0 = h(0.0);
      PlotSeries density{"needle " + std::to_string(i) + " density", "r", "h", {}};
      PlotSeries model{"needle " + std::to_string(i) + " h(0) J", "r", "h0J", {}};
      for (int k = 0; k < kSeriesPoints; ++k) {
        const double r = k + 1 == kSeriesPoints ? h.b() : h.a() + h.length() * k / (kSeriesPoints - 1);
        density.points.emplace_back(r, h(r));
        model.points.emplace_back(r, h0 * jacobian(p, r));
      }
      record_.series.push_back(std::move(density));
      record_.series.push_back(std::move(model));
    }
  }

  const ExperimentConfig& config_;
  RunRecord& record_;
  NeedleDecomposition dec_;
  std::optional<RigidityReport> rigidity_;
  bool needle_series_added_ = false;
};

}  // namespace

RunRecord run(const ExperimentConfig& config) {
  RunRecord record;
  record.geometry = describe(config.geometry);
  record.r0 = surface_radius(config.surface);
  try {
    Runner runner(config, record);
    runner.summarize();
    for (CheckKind check : config.checks) runner.execute(check);
    runner.check_expectation();
  } catch (const Error& e) {
    record.failures.push_back({"decompose", e.what()});
  }
  return record;
}

}  // namespace needlecomp
