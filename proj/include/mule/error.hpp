#pragma once

#include <stdexcept>
#include <string>

namespace mule {

// Failure categories surfaced to callers; the CLI maps them to exit codes.
enum class ErrorCode {
  Validation,   // malformed or physically inconsistent input
  SizeCap,      // instance exceeds a solver's hard size cap
  Infeasible,   // no tour exists in the given graph
  Malformed,    // structurally broken tour/plan handed to a consumer
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mule
