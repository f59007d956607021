#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aurea {

/// Base class for violations of a mathematical precondition (division by
/// zero, ratio outside (1, 2], too many subdivision steps, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ZeroDivisionError : public DomainError {
 public:
  using DomainError::DomainError;
};

class RatioOutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
};

class StepsExceedDegree : public DomainError {
 public:
  StepsExceedDegree(const std::string& what, long long degree)
      : DomainError(what), degree_(degree) {}
  long long degree() const noexcept { return degree_; }

 private:
  long long degree_;
};

/// Malformed textual input; carries the 0-based offset of the offending char.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace aurea
