#pragma once

#include <stdexcept>
#include <string>

namespace cellule {

enum class ErrorCode {
  InvalidWeights,
  UnsupportedType,
  UnknownGenerator,
  BallTooLarge,
  InfiniteParabolic,
  PreconditionViolated,
  RadiusTooSmall,
  NotAntisymmetric,
  ContextInvalid,
  OracleDisagreement,
  AmbiguousAssignment,
  NoAssignment,
  StabilizationUnknown,
  RankUnsupported,
  Internal,
};

const char* error_code_name(ErrorCode c);

// Single exception type for the whole library; the code makes errors
// machine-checkable without a large exception hierarchy.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace cellule
