#include "needlecomp/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <set>
#include <string>

#include "needlecomp/errors.hpp"

namespace needlecomp {

namespace {

struct Entry {
  std::string value;
  int line;
};

using Section = std::map<std::string, Entry>;
using Document = std::map<std::string, Section>;

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"geometry", {"type", "n", "radius", "R", "K", "N", "base_volume", "length"}},
      {"surface", {"r0"}},
      {"checks", {"run", "t_values", "expect", "H0"}},
      {"tolerances", {"equality", "inequality", "grid", "profile_grid"}},
      {"output", {"format", "path"}},
  };
  return keys;
}

// Keys each geometry type requires; anything else in [geometry] is rejected.
const std::map<std::string, std::set<std::string>>& geometry_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"round-sphere", {"n", "radius"}},
      {"euclidean-ball", {"n", "R"}},
      {"spherical-suspension", {"K", "N", "base_volume"}},
      {"model-interval", {"K", "N"}},
      {"sine-interval", {"K", "N", "length"}},
      {"constant-interval", {"K", "N", "length"}},
  };
  return keys;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

void check_known(const std::string& section, const std::string& key, int line) {
  const auto it = schema().find(section);
  if (it == schema().end()) throw ParseError(line, key, "unknown section [" + section + "]");
  if (!it->second.contains(key)) {
    throw ParseError(line, key, "unknown key in section [" + section + "]");
  }
}

Document read_document(std::string_view text) {
  Document doc;
  std::string section;
  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    ++line_number;
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_number, std::string(line), "unterminated header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (!schema().contains(section)) {
        throw ParseError(line_number, section, "unknown section");
      }
      doc[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(line_number, std::string(line), "expected key = value");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ParseError(line_number, key, "empty key");
    if (section.empty()) throw ParseError(line_number, key, "key outside any [section]");
    check_known(section, key, line_number);
    if (doc[section].contains(key)) throw ParseError(line_number, key, "duplicate key");
    doc[section][key] = {value, line_number};
    if (end == text.size()) break;
  }
  return doc;
}

double to_real(const Entry& e, const std::string& key) {
  double value = 0.0;
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ParseError(e.line, key, "expected a finite decimal number, got '" + e.value + "'");
  }
  return value;
}

int to_int(const Entry& e, const std::string& key) {
  int value = 0;
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(e.line, key, "expected an integer, got '" + e.value + "'");
  }
  return value;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> items;
  if (trim(text).empty()) return items;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    items.emplace_back(trim(text.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return items;
}

const Entry& require(const Section& s, const std::string& section, const std::string& key) {
  const auto it = s.find(key);
  if (it == s.end()) {
    throw ValidationError("missing key '" + key + "' in section [" + section + "]");
  }
  return it->second;
}

CurvatureDimension read_cd(const Section& g) {
  try {
    return CurvatureDimension(to_real(require(g, "geometry", "K"), "K"),
                              to_real(require(g, "geometry", "N"), "N"));
  } catch (const ParameterError& e) {
    throw ValidationError(e.what());
  }
}

GeometrySpec build_geometry(const Section& g) {
  const Entry& type_entry = require(g, "geometry", "type");
  const std::string& type = type_entry.value;
  const auto allowed = geometry_keys().find(type);
  if (allowed == geometry_keys().end()) {
    throw ParseError(type_entry.line, "type", "unknown geometry type '" + type + "'");
  }
  for (const auto& [key, entry] : g) {
    if (key != "type" && !allowed->second.contains(key)) {
      throw ValidationError("key '" + key + "' (line " + std::to_string(entry.line) +
                            ") is not used by geometry type " + type);
    }
  }
  auto real = [&](const std::string& key) { return to_real(require(g, "geometry", key), key); };

  try {
    GeometrySpec spec = [&]() -> GeometrySpec {
      if (type == "round-sphere") {
        return RoundSphere{to_int(require(g, "geometry", "n"), "n"), real("radius")};
      }
      if (type == "euclidean-ball") {
        return EuclideanBall{to_int(require(g, "geometry", "n"), "n"), real("R")};
      }
      if (type == "spherical-suspension") return SphericalSuspension{read_cd(g), real("base_volume")};
      if (type == "model-interval") return model_interval(read_cd(g));
      if (type == "sine-interval") return sine_interval(read_cd(g), real("length"));
      return constant_interval(read_cd(g), real("length"));
    }();
    validate(spec);
    return spec;
  } catch (const ParameterError& e) {
    throw ValidationError(std::string("geometry: ") + e.what());
  }
}

void apply(Document& doc, const ConfigOverride& o) {
  check_known(o.section, o.key, 0);
  doc[o.section][o.key] = {o.value, 0};
}

}  // namespace

std::string_view check_name(CheckKind check) noexcept {
  switch (check) {
    case CheckKind::cd_density:
      return "cd-density";
    case CheckKind::sturm:
      return "sturm";
    case CheckKind::ratio:
      return "ratio";
    case CheckKind::hk_outer:
      return "hk-outer";
    case CheckKind::hk_full:
      return "hk-full";
    case CheckKind::corollaries:
      return "corollaries";
    case CheckKind::levy_gromov:
      return "levy-gromov";
    case CheckKind::rigidity:
      return "rigidity";
    case CheckKind::minkowski:
      return "minkowski";
  }
  return "unknown";
}

std::optional<CheckKind> parse_check_name(std::string_view name) noexcept {
  static constexpr std::array kAll = {
      CheckKind::cd_density,  CheckKind::sturm,       CheckKind::ratio,
      CheckKind::hk_outer,    CheckKind::hk_full,     CheckKind::corollaries,
      CheckKind::levy_gromov, CheckKind::rigidity,    CheckKind::minkowski,
  };
  for (CheckKind c : kAll) {
    if (check_name(c) == name) return c;
  }
  return std::nullopt;
}

std::string_view format_name(OutputFormat format) noexcept {
  switch (format) {
    case OutputFormat::report:
      return "report";
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::plotdata:
      return "plotdata";
  }
  return "unknown";
}

double default_equality_tolerance() {
  const char* env = std::getenv("NEEDLECOMP_TOL");
  if (env == nullptr || *env == '\0') return kEqualityTolerance;
  const std::string text(env);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !(value > 0.0)) {
    throw ValidationError("NEEDLECOMP_TOL must be a positive number, got '" + text + "'");
  }
  return value;
}

ConfigOverride parse_override(std::string_view text) {
  const auto eq = text.find('=');
  const auto dot = text.find('.');
  if (eq == std::string_view::npos || dot == std::string_view::npos || dot > eq) {
    throw ParseError(0, std::string(text), "override must look like section.key=value");
  }
  return {std::string(trim(text.substr(0, dot))), std::string(trim(text.substr(dot + 1, eq - dot - 1))),
          std::string(trim(text.substr(eq + 1)))};
}

ExperimentConfig parse_config(std::string_view text, const std::vector<ConfigOverride>& overrides) {
  Document doc = read_document(text);
  for (const auto& o : overrides) apply(doc, o);

  GeometrySpec geometry = build_geometry(doc["geometry"]);

  const Entry& r0_entry = require(doc["surface"], "surface", "r0");
  const double r0 = to_real(r0_entry, "r0");
  SurfaceSpec surface = std::holds_alternative<WeightedInterval>(geometry)
                            ? SurfaceSpec{LevelPoint{r0}}
                            : SurfaceSpec{GeodesicSphere{r0}};
  try {
    validate_surface(geometry, surface);
  } catch (const Error& e) {
    throw ValidationError(std::string("surface: ") + e.what());
  }

  ExperimentConfig config{std::move(geometry), surface, {}, {}, Expectation::none, std::nullopt,
                          HKOptions{}, 48, OutputFormat::report, {}};
  config.tolerances.equality_tolerance = default_equality_tolerance();

  Section& checks = doc["checks"];
  if (const auto it = checks.find("run"); it != checks.end()) {
    for (const auto& name : split_list(it->second.value)) {
      const auto check = parse_check_name(name);
      if (!check) throw ParseError(it->second.line, "run", "unknown check '" + name + "'");
      if (std::find(config.checks.begin(), config.checks.end(), *check) == config.checks.end()) {
        config.checks.push_back(*check);
      }
    }
  }
  if (const auto it = checks.find("t_values"); it != checks.end()) {
    for (const auto& item : split_list(it->second.value)) {
      const double t = to_real({item, it->second.line}, "t_values");
      if (!(t > 0.0)) throw ValidationError("t_values must be positive");
      config.t_values.push_back(t);
    }
  }
  if (const auto it = checks.find("expect"); it != checks.end()) {
    const std::string& v = it->second.value;
    if (v == "rigid") {
      config.expect = Expectation::rigid;
    } else if (v == "not-rigid") {
      config.expect = Expectation::not_rigid;
    } else if (v == "none" || v.empty()) {
      config.expect = Expectation::none;
    } else {
      throw ParseError(it->second.line, "expect", "expected rigid, not-rigid or none");
    }
  }
  if (const auto it = checks.find("H0"); it != checks.end()) {
    config.H0 = to_real(it->second, "H0");
  }

  Section& tol = doc["tolerances"];
  if (const auto it = tol.find("equality"); it != tol.end()) {
    config.tolerances.equality_tolerance = to_real(it->second, "equality");
  }
  if (const auto it = tol.find("inequality"); it != tol.end()) {
    config.tolerances.inequality_slack = to_real(it->second, "inequality");
  }
  if (const auto it = tol.find("grid"); it != tol.end()) config.grid = to_int(it->second, "grid");
  if (const auto it = tol.find("profile_grid"); it != tol.end()) {
    config.tolerances.profile_grid = to_int(it->second, "profile_grid");
  }
  if (!(config.tolerances.equality_tolerance > 0.0) || !(config.tolerances.inequality_slack >= 0.0)) {
    throw ValidationError("tolerances must be positive");
  }
  if (config.grid < 3 || config.tolerances.profile_grid < 1) {
    throw ValidationError("grid must be >= 3 and profile_grid >= 1");
  }

  Section& out = doc["output"];
  if (const auto it = out.find("format"); it != out.end()) {
    const std::string& v = it->second.value;
    if (v == "report") {
      config.format = OutputFormat::report;
    } else if (v == "csv") {
      config.format = OutputFormat::csv;
    } else if (v == "plotdata") {
      config.format = OutputFormat::plotdata;
    } else {
      throw ParseError(it->second.line, "format", "expected report, csv or plotdata");
    }
  }
  if (const auto it = out.find("path"); it != out.end()) config.output_path = it->second.value;
  return config;
}

}  // namespace needlecomp
