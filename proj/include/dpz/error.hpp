#pragma once

#include <stdexcept>
#include <string>

namespace dpz {

enum class Err {
  // malformed input (CLI exit 2)
  InvalidInput,
  InvalidR,
  InvalidDegree,
  InvalidChar,
  WrongDegree,
  FieldMismatch,
  MismatchedLattice,
  NotARoot,
  NotADE,
  // precondition / applicability failure (CLI exit 3)
  NotPseudoEffective,
  NotNef,
  NotBig,
  NotDelPezzo,
  DegreeTooSmall,
  DecompositionFailed,
  HodgeViolation,
  NotOnCurve,
  SingularPoint,
  Undefined,
  // internal inconsistency (CLI exit 4)
  InternalInconsistency,
};

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Err code() const { return code_; }

  // CLI exit code: 2 malformed input, 3 precondition failure, 4 internal bug.
  int exit_code() const {
    switch (code_) {
      case Err::InvalidInput:
      case Err::InvalidR:
      case Err::InvalidDegree:
      case Err::InvalidChar:
      case Err::WrongDegree:
      case Err::FieldMismatch:
      case Err::MismatchedLattice:
      case Err::NotARoot:
      case Err::NotADE:
        return 2;
      case Err::InternalInconsistency:
        return 4;
      default:
        return 3;
    }
  }

  const char* code_name() const {
    switch (code_) {
      case Err::InvalidInput: return "InvalidInput";
      case Err::InvalidR: return "InvalidR";
      case Err::InvalidDegree: return "InvalidDegree";
      case Err::InvalidChar: return "InvalidChar";
      case Err::WrongDegree: return "WrongDegree";
      case Err::FieldMismatch: return "FieldMismatch";
      case Err::MismatchedLattice: return "MismatchedLattice";
      case Err::NotARoot: return "NotARoot";
      case Err::NotADE: return "NotADE";
      case Err::NotPseudoEffective: return "NotPseudoEffective";
      case Err::NotNef: return "NotNef";
      case Err::NotBig: return "NotBig";
      case Err::NotDelPezzo: return "NotDelPezzo";
      case Err::DegreeTooSmall: return "DegreeTooSmall";
      case Err::DecompositionFailed: return "DecompositionFailed";
      case Err::HodgeViolation: return "HodgeViolation";
      case Err::NotOnCurve: return "NotOnCurve";
      case Err::SingularPoint: return "SingularPoint";
      case Err::Undefined: return "Undefined";
      case Err::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
  }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace dpz
