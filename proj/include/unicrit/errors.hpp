#pragma once

#include <stdexcept>
#include <string>

namespace unicrit {

enum class ErrorKind {
  Domain,
  Parse,
  DuplicateGenerator,
  InvalidExponent,
  EmptySet,
  InvalidWord,
  DegreeCapExceeded,
  OrbitTooLarge,
  NoIrreducibleGenerator,
  OpenCase,
  InternalContradiction,
  InputNotSpecial,
  PrefixNotCertified,
  UnknownCurve,
  UnknownClaim,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DuplicateGenerator: return "DuplicateGenerator";
    case ErrorKind::InvalidExponent: return "InvalidExponent";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::InvalidWord: return "InvalidWord";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::OrbitTooLarge: return "OrbitTooLarge";
    case ErrorKind::NoIrreducibleGenerator: return "NoIrreducibleGenerator";
    case ErrorKind::OpenCase: return "OpenCase";
    case ErrorKind::InternalContradiction: return "InternalContradiction";
    case ErrorKind::InputNotSpecial: return "InputNotSpecial";
    case ErrorKind::PrefixNotCertified: return "PrefixNotCertified";
    case ErrorKind::UnknownCurve: return "UnknownCurve";
    case ErrorKind::UnknownClaim: return "UnknownClaim";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define UNICRIT_DEFINE_ERROR(Name, Kind)                                     \
  class Name : public Error {                                                \
   public:                                                                   \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
  };

UNICRIT_DEFINE_ERROR(DomainError, Domain)
UNICRIT_DEFINE_ERROR(ParseError, Parse)
UNICRIT_DEFINE_ERROR(DuplicateGenerator, DuplicateGenerator)
UNICRIT_DEFINE_ERROR(InvalidExponent, InvalidExponent)
UNICRIT_DEFINE_ERROR(EmptySet, EmptySet)
UNICRIT_DEFINE_ERROR(InvalidWord, InvalidWord)
UNICRIT_DEFINE_ERROR(DegreeCapExceeded, DegreeCapExceeded)
UNICRIT_DEFINE_ERROR(OrbitTooLarge, OrbitTooLarge)
UNICRIT_DEFINE_ERROR(NoIrreducibleGenerator, NoIrreducibleGenerator)
UNICRIT_DEFINE_ERROR(OpenCase, OpenCase)
UNICRIT_DEFINE_ERROR(InternalContradiction, InternalContradiction)
UNICRIT_DEFINE_ERROR(InputNotSpecial, InputNotSpecial)
UNICRIT_DEFINE_ERROR(PrefixNotCertified, PrefixNotCertified)
UNICRIT_DEFINE_ERROR(UnknownCurve, UnknownCurve)
UNICRIT_DEFINE_ERROR(UnknownClaim, UnknownClaim)

#undef UNICRIT_DEFINE_ERROR

/// Errors the caller caused by handing in bad input (CLI exit code 2).
inline bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain:
    case ErrorKind::Parse:
    case ErrorKind::DuplicateGenerator:
    case ErrorKind::InvalidExponent:
    case ErrorKind::EmptySet:
    case ErrorKind::InvalidWord:
    case ErrorKind::DegreeCapExceeded:
    case ErrorKind::OrbitTooLarge:
    case ErrorKind::NoIrreducibleGenerator:
    case ErrorKind::InputNotSpecial:
    case ErrorKind::PrefixNotCertified:
    case ErrorKind::UnknownCurve:
    case ErrorKind::UnknownClaim:
      return true;
    default:
      return false;
  }
}

}  // namespace unicrit
