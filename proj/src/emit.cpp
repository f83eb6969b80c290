#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "needlecomp/errors.hpp"
#include "needlecomp/runner.hpp"

namespace needlecomp {

namespace {

const char* kCsvHeader = "statement,t,lhs,rhs,gap,relative_gap,equality,H_plus,H_minus,H\n";

std::string boolean(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string render_csv(const std::vector<HKReport>& reports) {
  std::ostringstream os;
  os << kCsvHeader;
  const HKReport* tightest = nullptr;
  bool all_equal = true;
  for (const HKReport& r : reports) {
    const std::string t = r.t ? format_real(*r.t) : "";
    for (const NeedleDiagnostics& d : r.per_needle) {
      const double gap = d.rhs - d.lhs;
      const double rel = d.rhs > 0.0 ? gap / d.rhs : 0.0;
      os << statement_tag(r.statement) << ',' << t << ',' << format_real(d.lhs) << ','
         << format_real(d.rhs) << ',' << format_real(gap) << ',' << format_real(rel) << ','
         << boolean(d.profile_match) << ',' << format_real(d.H_plus) << ','
         << format_real(d.H_minus) << ',' << format_real(d.H) << '\n';
    }
    if (tightest == nullptr || r.relative_gap < tightest->relative_gap) tightest = &r;
    all_equal = all_equal && r.equality;
  }
  // One summary row: the report closest to equality.
  if (tightest == nullptr) {
    os << "summary,,,,,,,,,\n";
  } else {
    os << "summary," << (tightest->t ? format_real(*tightest->t) : "") << ','
       << format_real(tightest->lhs) << ',' << format_real(tightest->rhs) << ','
       << format_real(tightest->gap) << ',' << format_real(tightest->relative_gap) << ','
       << boolean(all_equal) << ",,,\n";
  }
  return os.str();
}

std::string render_plotdata(const std::vector<PlotSeries>& series) {
  std::ostringstream os;
  bool first = true;
  for (const PlotSeries& s : series) {
    if (!first) os << "\n\n";
    first = false;
    os << "# series: " << s.name << '\n' << "# columns: " << s.x_label << ' ' << s.y_label << '\n';
    for (const auto& [x, y] : s.points) os << format_real(x) << ' ' << format_real(y) << '\n';
  }
  return os.str();
}

std::string render_report(const RunRecord& record) {
  std::ostringstream os;
  os << "geometry: " << record.geometry << '\n';
  os << "surface r0: " << format_real(record.r0) << '\n';
  for (const auto& [key, value] : record.summary) os << key << ": " << value << '\n';
  for (const CheckResult& c : record.checks) {
    os << '\n' << '[' << check_name(c.check) << "] " << (c.pass ? "ok" : "FAIL") << '\n';
    if (!c.error.empty()) os << "  error: " << c.error << '\n';
    for (const auto& [key, value] : c.fields) os << "  " << key << " = " << value << '\n';
  }
  os << '\n';
  if (record.failures.empty()) {
    os << "status: ok\n";
  } else {
    os << "status: FAIL (" << record.failures.size() << ")\n";
    for (const Failure& f : record.failures) os << "  " << f.check << ": " << f.reason << '\n';
  }
  return os.str();
}

std::string render(const RunRecord& record, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return render_csv(record.reports);
    case OutputFormat::plotdata:
      return render_plotdata(record.series);
    case OutputFormat::report:
      break;
  }
  return render_report(record);
}

std::string failure_summary_json(const RunRecord& record) {
  nlohmann::json doc;
  doc["status"] = record.failures.empty() ? "ok" : "fail";
  doc["failures"] = nlohmann::json::array();
  for (const Failure& f : record.failures) {
    doc["failures"].push_back({{"check", f.check}, {"reason", f.reason}});
  }
  return doc.dump();
}

void write_file_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path, "cannot open temporary file for writing");
    out << content;
    out.flush();
    if (!out) throw IoError(path, "write failed");
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw IoError(path, "cannot move temporary file into place");
  }
}

void emit(const RunRecord& record, OutputFormat format, const std::string& path) {
  write_file_atomically(path, render(record, format));
}

}  // namespace needlecomp
