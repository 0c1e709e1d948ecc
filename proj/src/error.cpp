#include "verl/error.hpp"

namespace verl {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::InvalidTable: return "InvalidTable";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotASubset: return "NotASubset";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::InvalidRepresentatives: return "InvalidRepresentatives";
    case ErrorCode::WrongSide: return "WrongSide";
    case ErrorCode::SystemMismatch: return "SystemMismatch";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::SupportOutsideSubgroup: return "SupportOutsideSubgroup";
    case ErrorCode::UnsupportedRing: return "UnsupportedRing";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::NonAbelianCarrier: return "NonAbelianCarrier";
    case ErrorCode::NonAbelianQuotient: return "NonAbelianQuotient";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace verl
