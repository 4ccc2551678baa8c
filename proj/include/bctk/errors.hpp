#pragma once

#include <stdexcept>
#include <string>

namespace bctk {

/// Malformed graph file. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Exact 64-bit integer arithmetic would wrap. Never silently ignored.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration-based operation was asked to exceed its size guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bctk
