#pragma once

#include <stdexcept>
#include <string>

namespace artinforge {

enum class ErrorCode {
  Dimension,
  Parse,
  UndefinedLeadingTerm,
  ZeroInput,
  ResourceLimit,
  NotArtinian,
  Contract,
  Equivariance,
  Range,
  Parity,
  ImproperIdeal,
  OrderMismatch,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code) noexcept;

// Single exception type for the library; the code drives the C API status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace artinforge
