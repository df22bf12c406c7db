#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permsplit {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-formed request that violates a mathematical precondition
/// (u not below v, Gale order failure, non-quotient flag, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input. `position` is a 0-based character
/// offset into the offending text when one is meaningful.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position = 0)
      : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace permsplit
