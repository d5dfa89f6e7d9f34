#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zps {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingError : public Error {
 public:
  enum class Kind { NotPrime, BadExponent, Overflow };

  RingError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Operands belong to different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// A brute-force computation would exceed its configured enumeration cap.
class LimitExceeded : public Error {
 public:
  LimitExceeded(const std::string& what, std::uint64_t requested, std::uint64_t limit)
      : Error(what), requested_(requested), limit_(limit) {}

  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t requested_;
  std::uint64_t limit_;
};

/// Operation is undefined for the given input (e.g. minimum distance of the zero code).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A property guaranteed by theory failed to hold. Never expected at runtime.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace zps
