#pragma once

#include <string>
#include <utility>
#include <vector>

#include "needlecomp/config.hpp"
#include "needlecomp/format.hpp"
#include "needlecomp/hk.hpp"

namespace needlecomp {

using Field = std::pair<std::string, std::string>;

/// Outcome of one named check.
struct CheckResult {
  CheckKind check;
  /// Mandated condition held, or the check is informational.
  bool pass = true;
  std::vector<Field> fields;
  /// Message of the operation error raised by the check, if any.
  std::string error;
};

/// Two-column (x, y) series for external plotting.
struct PlotSeries {
  std::string name;
  std::string x_label;
  std::string y_label;
  std::vector<std::pair<double, double>> points;
};

struct Failure {
  std::string check;
  std::string reason;
};

struct RunRecord {
  std::string geometry;
  double r0 = 0.0;
  std::vector<Field> summary;
  std::vector<CheckResult> checks;
  std::vector<HKReport> reports;
  std::vector<PlotSeries> series;
  std::vector<Failure> failures;

  /// 0 iff every mandated inequality held and every expectation matched.
  int exit_status() const noexcept { return failures.empty() ? 0 : 1; }
};

/// Runs every configured check in order. Operation errors are recorded as
/// failures of the originating check, never thrown.
RunRecord run(const ExperimentConfig& config);

std::string render_csv(const std::vector<HKReport>& reports);
std::string render_plotdata(const std::vector<PlotSeries>& series);
std::string render_report(const RunRecord& record);
std::string render(const RunRecord& record, OutputFormat format);

/// {"status": ..., "failures": [{"check": ..., "reason": ...}]}
std::string failure_summary_json(const RunRecord& record);

/// Writes via a temporary sibling file and a rename; throws IoError.
void write_file_atomically(const std::string& path, const std::string& content);

/// Renders the record and writes it to `path`.
void emit(const RunRecord& record, OutputFormat format, const std::string& path);

}  // namespace needlecomp
