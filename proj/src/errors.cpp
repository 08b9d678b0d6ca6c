#include "mediankit/errors.hpp"

#include <cstdlib>

namespace mediankit {

const char* codeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::WallBudgetExceeded: return "WALL_BUDGET_EXCEEDED";
    case ErrorCode::EmptyInput: return "EMPTY_INPUT";
    case ErrorCode::NotAnAutomorphism: return "NOT_AN_AUTOMORPHISM";
    case ErrorCode::NotANewPoint: return "NOT_A_NEW_POINT";
    case ErrorCode::OutOfWindow: return "OUT_OF_WINDOW";
    case ErrorCode::DisplacementTooSmall: return "DISPLACEMENT_TOO_SMALL";
    case ErrorCode::NotTransverse: return "NOT_TRANSVERSE";
    case ErrorCode::NotFacing: return "NOT_FACING";
    case ErrorCode::InclusionFailed: return "INCLUSION_FAILED";
    case ErrorCode::ClassNotPreserved: return "CLASS_NOT_PRESERVED";
    case ErrorCode::ClassPermuted: return "CLASS_PERMUTED";
    case ErrorCode::HorizonExceeded: return "HORIZON_EXCEEDED";
    case ErrorCode::InvalidInput: return "INVALID_INPUT";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(codeName(code)) + ": " + what), code_(code) {}

std::size_t enumerationCap() {
  const char* env = std::getenv("MEDIANKIT_BUDGET");
  if (env != nullptr) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 20;
}

}  // namespace mediankit
