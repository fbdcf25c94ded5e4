#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilchain {

/// Invalid family/rank combination, or a Cartan matrix that is not of finite type.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Caller passed arguments outside an operation's contract (bad index,
/// mixed root systems, wrong chain species).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value that fails a mathematical precondition, e.g. a chain outside the
/// domain of a pairing or a root set that is not upper-closed.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Enumeration would exceed the configured chain budget.
class ChainLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace nilchain
