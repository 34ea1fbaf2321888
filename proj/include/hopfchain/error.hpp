#pragma once

#include <stdexcept>
#include <string>

namespace hopfchain {

enum class ErrorCode {
  invalid_input,
  no_markov_rescaling,
  not_nonnegative,
  unsupported_size,
  not_applicable,
  not_supported,
  internal_inconsistency,
};

const char* error_code_name(ErrorCode code);

class HopfError : public std::runtime_error {
 public:
  HopfError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace hopfchain
