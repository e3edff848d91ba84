#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace snark {

// Base for every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text; carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(std::string origin, std::size_t line, const std::string& message)
      : Error(origin + ":" + std::to_string(line) + ": " + message),
        origin_(std::move(origin)),
        line_(line) {}

  const std::string& origin() const noexcept { return origin_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string origin_;
  std::size_t line_;
};

// A referenced object (graph, action, ingredient) is missing or inconsistent.
// Distinct from a verification FAIL.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// The requested order violates the divisibility conditions.
class InadmissibleError : public Error {
 public:
  using Error::Error;
};

// The order is admissible but no available recipe reaches it.
class UnreachableError : public Error {
 public:
  using Error::Error;
};

}  // namespace snark
