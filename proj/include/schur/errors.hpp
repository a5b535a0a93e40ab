#pragma once

#include <stdexcept>
#include <string>

namespace schur {

// Error categories map one-to-one onto CLI exit codes: usage-like failures
// exit 2, property violations exit 1.
enum class ErrorCode {
  Parse,
  Capacity,
  Usage,
  Precondition,
  NotPartition,
  MissingIdentityClass,
  NotInverseClosed,
  ModuleClosure,
  InvariantViolation,
  ClassificationGap,
};

const char* to_string(ErrorCode code);

class SchurError : public std::runtime_error {
 public:
  SchurError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // 1 for counterexample-style failures, 2 for bad input.
  int exit_code() const noexcept;

 private:
  ErrorCode code_;
};

class ParseError : public SchurError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : SchurError(ErrorCode::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace schur
