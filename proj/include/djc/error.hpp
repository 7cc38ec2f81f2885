#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace djc {

enum class ErrorCode {
  UnknownVertex,
  BoundaryVertex,
  IrregularVertex,
  NotAPath,
  NonOrientable,
  DisconnectedComplex,
  NotSimple,
  EdgeMissing,
  NoDetour,
  BoundaryContact,
  VertexNotOnCurve,
  EqualEndpoints,
  IrregularSharedVertex,
  CurveTouchesBoundary,
  CurveNotClosed,
  HypothesesFailed,
  NotAnArc,
  AnchorNotOnCurve,
  InteriorNotTriangulated,
  InteriorNotDisk,
  TooLarge,
  DegenerateBBox,
  NotSimplePolygon,
  LatticeTooCoarse,
  CurveTriangleMultiCross,
  InvertedCell,
  BadParameters,
  BudgetExhausted,
  NoCoordinates,
  Parse,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for every library failure; `code()` is what callers
/// branch on, `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace djc
