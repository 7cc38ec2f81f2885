#include "djc/error.hpp"

namespace djc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::BoundaryVertex: return "BoundaryVertex";
    case ErrorCode::IrregularVertex: return "IrregularVertex";
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::NonOrientable: return "NonOrientable";
    case ErrorCode::DisconnectedComplex: return "DisconnectedComplex";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::EdgeMissing: return "EdgeMissing";
    case ErrorCode::NoDetour: return "NoDetour";
    case ErrorCode::BoundaryContact: return "BoundaryContact";
    case ErrorCode::VertexNotOnCurve: return "VertexNotOnCurve";
    case ErrorCode::EqualEndpoints: return "EqualEndpoints";
    case ErrorCode::IrregularSharedVertex: return "IrregularSharedVertex";
    case ErrorCode::CurveTouchesBoundary: return "CurveTouchesBoundary";
    case ErrorCode::CurveNotClosed: return "CurveNotClosed";
    case ErrorCode::HypothesesFailed: return "HypothesesFailed";
    case ErrorCode::NotAnArc: return "NotAnArc";
    case ErrorCode::AnchorNotOnCurve: return "AnchorNotOnCurve";
    case ErrorCode::InteriorNotTriangulated: return "InteriorNotTriangulated";
    case ErrorCode::InteriorNotDisk: return "InteriorNotDisk";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DegenerateBBox: return "DegenerateBBox";
    case ErrorCode::NotSimplePolygon: return "NotSimplePolygon";
    case ErrorCode::LatticeTooCoarse: return "LatticeTooCoarse";
    case ErrorCode::CurveTriangleMultiCross: return "CurveTriangleMultiCross";
    case ErrorCode::InvertedCell: return "InvertedCell";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::NoCoordinates: return "NoCoordinates";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace djc
