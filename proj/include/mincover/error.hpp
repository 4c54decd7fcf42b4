#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mincover {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input exceeds a configured enumeration/search bound.
class SizeLimit : public Error {
 public:
  using Error::Error;
};

// A selection was required to cover its host but does not.
class NotACover : public Error {
 public:
  using Error::Error;
};

// An internal postcondition failed. Never expected on valid input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mincover
