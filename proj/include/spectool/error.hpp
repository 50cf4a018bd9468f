#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spectool {

enum class ErrorCode {
  kMalformedHeader,
  kBadPadding,
  kTruncatedBody,
  kUnsupportedOrder,
  kInvalidOrder,
  kInvalidArgument,
  kEmptyGraph,
  kOutOfRangeVertex,
  kParseError,
  kNonConvergence,
  kNonIntegral,
  kDisconnectedInput,
  kPreconditionViolated,
  kNotTight,
  kExpansionMismatch,
  kHypothesisNotMet,
  kOrderTooLarge,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported as spectool::Error carrying a code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spectool
