#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace verl {

enum class ErrorCode {
  NotAssociative,
  NoIdentity,
  NoInverse,
  SizeLimitExceeded,
  InvalidTable,
  NotASubgroup,
  NotASubset,
  NotNormal,
  InvalidRepresentatives,
  WrongSide,
  SystemMismatch,
  RingMismatch,
  CarrierMismatch,
  SupportOutsideSubgroup,
  UnsupportedRing,
  DimMismatch,
  NonAbelianCarrier,
  NonAbelianQuotient,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code is stable; the message names
/// the offending indices, labels, or positions.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace verl
