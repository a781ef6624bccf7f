#include "cycalc/error.hpp"

namespace cycalc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::UnresolvedGenerator: return "UnresolvedGenerator";
    case ErrorKind::UnknownBase: return "UnknownBase";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::UnsupportedConstruction: return "UnsupportedConstruction";
    case ErrorKind::NotPureShiftable: return "NotPureShiftable";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::NegativeDimension: return "NegativeDimension";
    case ErrorKind::NotIntegerCY: return "NotIntegerCY";
    case ErrorKind::HodgeUnsupported: return "HodgeUnsupported";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace cycalc
