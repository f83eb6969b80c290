#pragma once

#include <stdexcept>
#include <string>

namespace needlecomp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented parameter range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Evaluation point outside the domain of a profile or geometry.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A one-sided log-derivative at a surface crossing is infinite.
class CurvatureError : public Error {
 public:
  using Error::Error;
};

/// The surface meets the boundary of the radial range (needle base at an endpoint).
class DegenerateSurfaceError : public Error {
 public:
  using Error::Error;
};

/// Sign or range condition of a corollary bound is violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Tube-radius schedule unusable for extrapolation.
class ScheduleError : public Error {
 public:
  using Error::Error;
};

/// A proven inequality came out violated beyond slack. Always a defect.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration document.
class ParseError : public Error {
 public:
  ParseError(int line, std::string key, const std::string& reason)
      : Error("line " + std::to_string(line) + ": key '" + key + "': " + reason),
        line_(line),
        key_(std::move(key)) {}

  int line() const noexcept { return line_; }
  const std::string& key() const noexcept { return key_; }

 private:
  int line_;
  std::string key_;
};

/// Well-formed configuration describing an invalid experiment.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  IoError(const std::string& path, const std::string& reason)
      : Error(path + ": " + reason), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace needlecomp
