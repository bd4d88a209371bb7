#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bicanon {

// Invalid argument: out-of-range codes, shape mismatches, broken preconditions.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A matrix that does not have the block structure an operation requires.
// condition() is the 1-based index of the first violated structural condition.
class StructureError : public DomainError {
 public:
  StructureError(int condition, const std::string& what)
      : DomainError(what), condition_(condition) {}
  int condition() const noexcept { return condition_; }

 private:
  int condition_;
};

// Malformed matrix or graph text. line() is 1-based, 0 when not applicable.
class ParseError : public DomainError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DomainError(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A structural search budget (factorial bound, node limit) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bicanon
