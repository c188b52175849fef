#include "dconic/error.hpp"

namespace dconic {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::ParallelLines: return "ParallelLines";
    case ErrorCode::DegenerateRay: return "DegenerateRay";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::PointAtInfinity: return "PointAtInfinity";
    case ErrorCode::DegenerateP: return "DegenerateP";
    case ErrorCode::NonpositiveT: return "NonpositiveT";
    case ErrorCode::AsymptoticDirection: return "AsymptoticDirection";
    case ErrorCode::OnExcludedLine: return "OnExcludedLine";
    case ErrorCode::ParabolaMember: return "ParabolaMember";
    case ErrorCode::CenterHasNoPolar: return "CenterHasNoPolar";
    case ErrorCode::LineThroughCenter: return "LineThroughCenter";
    case ErrorCode::CenterNotFocus: return "CenterNotFocus";
    case ErrorCode::FocusOutsideDual: return "FocusOutsideDual";
    case ErrorCode::AngleOutOfRange: return "AngleOutOfRange";
    case ErrorCode::FormulaPole: return "FormulaPole";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::AllOppositeSidesParallel: return "AllOppositeSidesParallel";
    case ErrorCode::EmptyScene: return "EmptyScene";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

GeometryError::GeometryError(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace dconic
