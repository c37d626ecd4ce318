#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bracerig/coloring.hpp"
#include "bracerig/construct.hpp"
#include "bracerig/rigidity.hpp"

namespace bracerig {

inline constexpr int kSchemaVersion = 1;

struct DocumentVertex {
  VertexId id;
  double x = 0.0;
  double y = 0.0;
};

struct FrameworkDocument {
  int schema_version = kSchemaVersion;
  std::vector<DocumentVertex> vertices;
  std::vector<IdPair> edges;
  std::vector<IdPair> braces;
  std::optional<std::string> name;
  std::optional<std::uint64_t> seed;
};

/// Throws kMalformedJson for unparsable text and kSchemaError, with a JSON
/// path in details.path, for a document of the wrong shape.
FrameworkDocument parse_document(std::string_view text);
FrameworkDocument document_from_json(const nlohmann::json& j);

/// Runs every module validation; their errors come back as
/// kValidationError with the original code as cause.
BracedFramework to_braced(const FrameworkDocument& doc);
BracedFramework parse_framework(std::string_view text);

/// Canonical form: vertices sorted by id, every pair ordered and the pair
/// lists sorted, coordinates rounded to 12 significant digits.
FrameworkDocument document_from_braced(const BracedFramework& braced,
                                       std::optional<std::string> name = std::nullopt,
                                       std::optional<std::uint64_t> seed = std::nullopt);
FrameworkDocument document_from_pframework(const PFramework& pf,
                                           std::optional<std::string> name = std::nullopt,
                                           std::optional<std::uint64_t> seed = std::nullopt);
nlohmann::json document_to_json(const FrameworkDocument& doc);
/// Canonical bytes: keys sorted, two-space indent, trailing newline.
std::string serialize_document(const FrameworkDocument& doc);
std::string serialize_framework(const BracedFramework& braced);

/// Carpet input: an array of parallelograms, each an array of four [x, y]
/// corners in cyclic order. Throws kMalformedJson or kSchemaError.
std::vector<Parallelogram> parse_carpet(std::string_view text);
std::vector<Parallelogram> carpet_from_json(const nlohmann::json& j);

// Reports shared by the CLI and the service. Keys are sorted by nlohmann's
// default object type, so dumps are deterministic.

nlohmann::json edge_pair_json(const StructuralGraph& g, const Edge& e);
nlohmann::json ribbons_report(const PFramework& pf);
nlohmann::json verdict_json(const Verdict& v);
nlohmann::json ribbon_graph_json(const StructuralGraph& g, const RibbonGraph& rg);
nlohmann::json completion_json(const CompletionResult& c);
/// [[u, v, "red" | "blue"], ...] in edge order.
nlohmann::json coloring_json(const StructuralGraph& g, const EdgeColoring& coloring);
/// Verdict, edge-to-ribbon map, ribbon and bracing graphs, completion.
/// Throws kSeparationViolated like rigidity_verdict.
nlohmann::json analyze_report(const BracedFramework& braced);

std::string analyze_text(const BracedFramework& braced);
std::string ribbons_text(const PFramework& pf);

}  // namespace bracerig
