#include "frobgen/error.hpp"

namespace frobgen {

std::string_view error_tag(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "E_DIVZERO";
    case ErrorKind::ContextMismatch: return "E_CONTEXT";
    case ErrorKind::NotPrime: return "E_PRIME";
    case ErrorKind::ParseError: return "E_PARSE";
    case ErrorKind::NotAPnPower: return "E_NOT_PN_POWER";
    case ErrorKind::ZeroInput: return "E_ZERO";
    case ErrorKind::ConstantInput: return "E_CONSTANT";
    case ErrorKind::ResourceLimit: return "E_RESOURCE";
    case ErrorKind::LevelExceeded: return "E_LEVEL";
    case ErrorKind::DegreeBoundViolation: return "E_DEGREE";
    case ErrorKind::InvalidInput: return "E_INPUT";
    case ErrorKind::UnsupportedPrime: return "E_UNSUPPORTED_PRIME";
    case ErrorKind::VerificationFailed: return "E_VERIFY";
    case ErrorKind::InternalError: return "E_INTERNAL";
  }
  return "E_UNKNOWN";
}

}  // namespace frobgen
