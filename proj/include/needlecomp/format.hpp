#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace needlecomp {

/// Shortest decimal string that parses back to the same double.
inline std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ec == std::errc() ? ptr : buffer);
}

}  // namespace needlecomp
