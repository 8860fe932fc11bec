#pragma once

#include <stdexcept>
#include <string>

namespace pbz {

enum class ErrorKind {
  NotALattice,
  NoBounds,
  NotInvolution,
  NotPseudoKleene,
  NotACongruence,
  TrivialSummand,
  ImproperInput,
  SizeLimit,
  UnexpectedType,
  AssertionFailed,
  Parse,
  UnboundVariable,
  DomainArity,
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind k, std::string msg) : std::runtime_error(std::move(msg)), kind(k) {}
  ErrorKind kind;
};

inline const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NoBounds: return "NoBounds";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::NotPseudoKleene: return "NotPseudoKleene";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::TrivialSummand: return "TrivialSummand";
    case ErrorKind::ImproperInput: return "ImproperInput";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::UnexpectedType: return "UnexpectedType";
    case ErrorKind::AssertionFailed: return "AssertionFailed";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::DomainArity: return "DomainArity";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace pbz
