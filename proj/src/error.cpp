#include "hopfchain/error.hpp"

namespace hopfchain {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_input: return "invalid-input";
    case ErrorCode::no_markov_rescaling: return "no-markov-rescaling";
    case ErrorCode::not_nonnegative: return "not-nonnegative";
    case ErrorCode::unsupported_size: return "unsupported-size";
    case ErrorCode::not_applicable: return "not-applicable";
    case ErrorCode::not_supported: return "not-supported";
    case ErrorCode::internal_inconsistency: return "internal-inconsistency";
  }
  return "unknown";
}

void fail(ErrorCode code, const std::string& message) { throw HopfError(code, message); }

}  // namespace hopfchain
