#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sforge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two nonzero homogeneous polynomials of different degrees were added.
class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// exact_div was asked for a quotient that does not exist.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// A polynomial handed to lift() is not fixed by the ring's group.
class NotInvariant : public Error {
 public:
  using Error::Error;
};

/// Operands live in different ambient rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside of its documented domain.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// A family descriptor violates its index inequalities.
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search requested beyond the configured degree cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a polynomial expression.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace sforge
