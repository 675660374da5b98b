#pragma once

#include <stdexcept>
#include <string>

namespace polarlab {

enum class ErrorCode {
  kParseError,
  kInvalidBody,
  kNonPositiveScale,
  kSingularMap,
  kNotInterior,
  kNotInteriorBody,
  kBadEpsilon,
  kBadParameter,
  kBadIndex,
  kNotPositiveDefinite,
  kPositiveDefinite,
  kEmptySample,
  kEmptyCloud,
  kGridMismatch,
  kNoConvergence,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace polarlab
