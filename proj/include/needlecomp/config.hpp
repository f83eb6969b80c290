#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "needlecomp/geometry.hpp"
#include "needlecomp/hk.hpp"

namespace needlecomp {

enum class CheckKind {
  cd_density,
  sturm,
  ratio,
  hk_outer,
  hk_full,
  corollaries,
  levy_gromov,
  rigidity,
  minkowski,
};

std::string_view check_name(CheckKind check) noexcept;
std::optional<CheckKind> parse_check_name(std::string_view name) noexcept;

enum class OutputFormat { report, csv, plotdata };

std::string_view format_name(OutputFormat format) noexcept;

enum class Expectation { none, rigid, not_rigid };

/// A validated experiment.
///
/// Document grammar: `[section]` headers followed by `key = value` lines;
/// `#` starts a comment; lists are comma separated. Sections and keys:
///
///   [geometry]   type, n, radius, R, K, N, base_volume, length
///   [surface]    r0
///   [checks]     run, t_values, expect, H0
///   [tolerances] equality, inequality, grid, profile_grid
///   [output]     format, path
struct ExperimentConfig {
  GeometrySpec geometry;
  SurfaceSpec surface;
  std::vector<CheckKind> checks;
  std::vector<double> t_values;
  Expectation expect = Expectation::none;
  std::optional<double> H0;
  HKOptions tolerances;
  /// Grid size for the brute-force density checks.
  int grid = 48;
  OutputFormat format = OutputFormat::report;
  /// Empty means standard output.
  std::string output_path;
};

/// `section.key=value`, applied after the document is read.
struct ConfigOverride {
  std::string section;
  std::string key;
  std::string value;
};

/// Parses "section.key=value"; throws ParseError when malformed.
ConfigOverride parse_override(std::string_view text);

/// Throws ParseError (line, key) for syntax errors and unknown keys, and
/// ValidationError for well-formed but invalid experiments.
ExperimentConfig parse_config(std::string_view text,
                              const std::vector<ConfigOverride>& overrides = {});

/// Default equality tolerance, taken from NEEDLECOMP_TOL when set.
double default_equality_tolerance();

}  // namespace needlecomp
