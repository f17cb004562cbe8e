#pragma once

#include <stdexcept>
#include <string>

namespace gcz {

// Every failure the library can signal, grouped so the CLI can map each one
// to a stable exit code (see exit_code).
enum class ErrorCode {
  bad_input,        // malformed file, bad flag value, invalid JSON
  shape_mismatch,   // operands disagree on (q, rows, cols)
  alphabet_closure, // -1 required but q is odd and q > 1
  invalid_signs,    // sign quadruple violates x1*x2 + x3*x4 = 0
  seed_rejected,    // construction seed failed the complementarity check
  claim_failed,     // verification claim not met
  guard_exceeded,   // search space larger than the configured guard
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::bad_input: return "bad-input";
    case ErrorCode::shape_mismatch: return "shape-mismatch";
    case ErrorCode::alphabet_closure: return "alphabet-closure";
    case ErrorCode::invalid_signs: return "invalid-signs";
    case ErrorCode::seed_rejected: return "seed-rejected";
    case ErrorCode::claim_failed: return "claim-failed";
    case ErrorCode::guard_exceeded: return "guard-exceeded";
  }
  return "unknown";
}

// Exit-code categories used by the CLI: 2 bad input, 3 failed claim,
// 4 guard exceeded.
inline int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::claim_failed: return 3;
    case ErrorCode::guard_exceeded: return 4;
    default: return 2;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gcz
