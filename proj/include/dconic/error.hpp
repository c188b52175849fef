#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dconic {

enum class ErrorCode {
  CoincidentPoints,
  ParallelLines,
  DegenerateRay,
  DegenerateConfiguration,
  PointAtInfinity,
  DegenerateP,
  NonpositiveT,
  AsymptoticDirection,
  OnExcludedLine,
  ParabolaMember,
  CenterHasNoPolar,
  LineThroughCenter,
  CenterNotFocus,
  FocusOutsideDual,
  AngleOutOfRange,
  FormulaPole,
  NotClosed,
  AllOppositeSidesParallel,
  EmptyScene,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Thrown by every kernel operation whose precondition fails. The code
/// names the degeneracy so callers (and the CLI exit status) can branch on it.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dconic
