#include "bracerig/error.hpp"

namespace bracerig {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kDuplicateVertex: return "DuplicateVertex";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kNotAnEdge: return "NotAnEdge";
    case ErrorCode::kRibbonNotSimpleCut: return "RibbonNotSimpleCut";
    case ErrorCode::kInvalidWalk: return "InvalidWalk";
    case ErrorCode::kMissingCoordinate: return "MissingCoordinate";
    case ErrorCode::kInvalidPlacement: return "InvalidPlacement";
    case ErrorCode::kForbiddenTranslation: return "ForbiddenTranslation";
    case ErrorCode::kNotEdgeCut: return "NotEdgeCut";
    case ErrorCode::kInconsistentRibbon: return "InconsistentRibbon";
    case ErrorCode::kSeparationViolated: return "SeparationViolated";
    case ErrorCode::kBadIntersection: return "BadIntersection";
    case ErrorCode::kBoundaryNotSimple: return "BoundaryNotSimple";
    case ErrorCode::kDegenerateParallelogram: return "DegenerateParallelogram";
    case ErrorCode::kPartialColoring: return "PartialColoring";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kTrivialFactor: return "TrivialFactor";
    case ErrorCode::kNotCartesian: return "NotCartesian";
    case ErrorCode::kPreconditionUnverified: return "PreconditionUnverified";
    case ErrorCode::kNotADiagonal: return "NotADiagonal";
    case ErrorCode::kDuplicateBrace: return "DuplicateBrace";
    case ErrorCode::kBraceIsStructuralEdge: return "BraceIsStructuralEdge";
    case ErrorCode::kOffsetInconsistent: return "OffsetInconsistent";
    case ErrorCode::kLengthDriftExceeded: return "LengthDriftExceeded";
    case ErrorCode::kUnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::kMalformedJson: return "MalformedJson";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kValidationError: return "ValidationError";
  }
  return "Unknown";
}

nlohmann::json Error::to_json() const {
  nlohmann::json out;
  out["error"] = std::string(to_string(code_));
  out["message"] = what();
  if (cause_) out["cause"] = std::string(to_string(*cause_));
  if (!details_.empty()) out["details"] = details_;
  return out;
}

}  // namespace bracerig
