#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minkorder {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Events of different space dimension were combined.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside its domain (non-finite coordinate, c <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A polyline segment moves faster than the light speed it was built for.
class SpeedViolation : public Error {
 public:
  SpeedViolation(std::size_t segment, double speed, double c);

  std::size_t segment() const noexcept { return segment_; }
  double speed() const noexcept { return speed_; }

 private:
  std::size_t segment_;
  double speed_;
};

/// Two hypersurface anchors violate the Lipschitz bound.
class InconsistentAnchors : public Error {
 public:
  InconsistentAnchors(std::size_t i, std::size_t j, double dh, double bound);

  std::size_t first() const noexcept { return i_; }
  std::size_t second() const noexcept { return j_; }

 private:
  std::size_t i_;
  std::size_t j_;
};

/// A relation matrix failed a partial-order axiom. Always a predicate bug.
class OrderAxiomError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace minkorder
