#include "schur/errors.hpp"

namespace schur {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Capacity: return "capacity";
    case ErrorCode::Usage: return "usage";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::NotPartition: return "not-a-partition";
    case ErrorCode::MissingIdentityClass: return "missing-identity-class";
    case ErrorCode::NotInverseClosed: return "not-inverse-closed";
    case ErrorCode::ModuleClosure: return "module-closure";
    case ErrorCode::InvariantViolation: return "invariant-violation";
    case ErrorCode::ClassificationGap: return "classification-gap";
  }
  return "unknown";
}

int SchurError::exit_code() const noexcept {
  switch (code_) {
    case ErrorCode::InvariantViolation:
    case ErrorCode::ClassificationGap:
      return 1;
    default:
      return 2;
  }
}

}  // namespace schur
