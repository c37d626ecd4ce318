#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace bracerig {

enum class ErrorCode {
  kInvalidArgument,
  kDisconnectedGraph,
  kSelfLoop,
  kDuplicateEdge,
  kDuplicateVertex,
  kUnknownVertex,
  kNotAnEdge,
  kRibbonNotSimpleCut,
  kInvalidWalk,
  kMissingCoordinate,
  kInvalidPlacement,
  kForbiddenTranslation,
  kNotEdgeCut,
  kInconsistentRibbon,
  kSeparationViolated,
  kBadIntersection,
  kBoundaryNotSimple,
  kDegenerateParallelogram,
  kPartialColoring,
  kTooLarge,
  kTrivialFactor,
  kNotCartesian,
  kPreconditionUnverified,
  kNotADiagonal,
  kDuplicateBrace,
  kBraceIsStructuralEdge,
  kOffsetInconsistent,
  kLengthDriftExceeded,
  kUnsupportedFormat,
  kMalformedJson,
  kSchemaError,
  kValidationError,
};

/// Stable name used in diagnostics and machine-readable output.
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        nlohmann::json details = nlohmann::json::object())
      : std::runtime_error(message), code_(code), details_(std::move(details)) {}

  ErrorCode code() const { return code_; }
  const nlohmann::json& details() const { return details_; }

  /// For kValidationError: the module error that caused the rejection.
  std::optional<ErrorCode> cause() const { return cause_; }
  Error& with_cause(ErrorCode cause) {
    cause_ = cause;
    return *this;
  }

  nlohmann::json to_json() const;

 private:
  ErrorCode code_;
  nlohmann::json details_;
  std::optional<ErrorCode> cause_;
};

}  // namespace bracerig
