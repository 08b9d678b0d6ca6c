#pragma once

#include <stdexcept>
#include <string>

namespace mediankit {

enum class ErrorCode {
  WallBudgetExceeded,
  EmptyInput,
  NotAnAutomorphism,
  NotANewPoint,
  OutOfWindow,
  DisplacementTooSmall,
  NotTransverse,
  NotFacing,
  InclusionFailed,
  ClassNotPreserved,
  ClassPermuted,
  HorizonExceeded,
  InvalidInput,
};

const char* codeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Cap on wall counts for exhaustive enumeration. MEDIANKIT_BUDGET overrides.
std::size_t enumerationCap();

}  // namespace mediankit
