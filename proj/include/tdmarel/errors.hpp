#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace tdmarel {

// Constraint violations on domain inputs (probabilities, model parameters,
// timings). The CLI maps these to exit code 3.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidProbabilityError : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidParameterError : public DomainError {
 public:
  using DomainError::DomainError;
};

class LengthMismatchError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotDominatingError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed documents: config schema violations and unparsable profile lines.
// The CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& what)
      : std::runtime_error(path.empty() ? what : path + ": " + what),
        path_(std::move(path)) {}

  /// JSON-pointer style location of the offending value ("" for the root).
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Out-of-range value found while reading a profile; carries the line number
// but is still a domain violation.
class ProfileRangeError : public InvalidProbabilityError {
 public:
  ProfileRangeError(std::size_t line, const std::string& what)
      : InvalidProbabilityError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// File and stream failures. The CLI maps these to exit code 4.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tdmarel
