#pragma once

#include <stdexcept>
#include <string>

namespace emedge {

// Error classes, each with a stable exit code for the CLI.
enum class ErrorCode : int {
  Syntax = 10,
  DanglingNodeRef = 11,
  DuplicateId = 12,
  UnsupportedKind = 13,
  NonManifold = 20,
  IndexOutOfRange = 21,
  EdgeOverflow = 22,
  SelfLoop = 23,
  MixedOrderMismatch = 24,
  SingularJacobian = 30,
  LengthMismatch = 31,
  EmptySystem = 40,
  MassNotPD = 41,
  TooLarge = 42,
  WrongOrder = 43,
  BenchFailed = 50,
  Usage = 64,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }
  int exit_code() const { return static_cast<int>(code_); }

private:
  ErrorCode code_;
};

}  // namespace emedge
