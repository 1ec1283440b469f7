#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eulersum {

/// Parameters outside an operation's domain (negative counts, depth limits, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A nonempty multi-index whose last part is 1; the series does not converge.
class DivergentSeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Tanh-sinh refinement stopped improving.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression or index text. `position` is a 0-based column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace eulersum
