#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frobgen {

enum class ErrorKind {
  DivisionByZero,
  ContextMismatch,
  NotPrime,
  ParseError,
  NotAPnPower,
  ZeroInput,
  ConstantInput,
  ResourceLimit,
  LevelExceeded,
  DegreeBoundViolation,
  InvalidInput,
  UnsupportedPrime,
  VerificationFailed,
  InternalError,
};

/// Short machine-readable tag, e.g. "E_PRIME". Used by the CLI error prefix.
std::string_view error_tag(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::ParseError,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace frobgen
