#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bracerig/geometry.hpp"

namespace bracerig {

/// A P-framework plus braces. Every brace is a diagonal of at least one
/// structural 4-cycle; the empty brace set is allowed.
class BracedFramework {
 public:
  /// Throws kUnknownVertex, kBraceIsStructuralEdge, kDuplicateBrace or
  /// kNotADiagonal.
  BracedFramework(PFramework pf, const std::vector<IdPair>& braces);

  const PFramework& pframework() const { return pf_; }
  const StructuralGraph& graph() const { return pf_.graph(); }
  const Placement& placement() const { return pf_.placement(); }
  const RibbonPartition& partition() const { return pf_.partition(); }

  /// Sorted by vertex index, i.e. by id.
  const std::vector<Edge>& braces() const { return braces_; }
  std::vector<IdPair> brace_ids() const;
  bool unbraced() const { return braces_.empty(); }

  /// 4-cycles (indices into graph().four_cycles()) having brace b as a diagonal.
  const std::vector<int>& brace_cycles(int b) const { return brace_cycles_[b]; }
  bool cycle_braced(int cycle) const { return cycle_braced_[cycle]; }

  /// Brace indices attached to each ribbon: a brace of a 4-cycle belongs to
  /// both ribbons of that cycle.
  const std::vector<std::vector<int>>& braced_ribbons() const { return ribbon_braces_; }

  /// Structural edges followed by braces, as one graph on the same vertices.
  const StructuralGraph& combined_graph() const { return combined_; }

 private:
  PFramework pf_;
  std::vector<Edge> braces_;
  std::vector<std::vector<int>> brace_cycles_;
  std::vector<bool> cycle_braced_;
  std::vector<std::vector<int>> ribbon_braces_;
  StructuralGraph combined_;
};

BracedFramework build_braced(PFramework pf, const std::vector<IdPair>& braces);

/// Same framework with extra braces.
BracedFramework with_added_braces(const BracedFramework& braced, const std::vector<IdPair>& extra);

struct RibbonGraphEdge {
  int a = 0;  ///< a < b
  int b = 0;
  std::vector<int> witnesses;  ///< 4-cycle indices, ascending

  friend bool operator==(const RibbonGraphEdge&, const RibbonGraphEdge&) = default;
};

/// Graph on ribbon ids. Edges are sorted by (a, b). Ribbon pairs whose shared
/// 4-cycles use one ribbon twice (non-simple) give no edge.
struct RibbonGraph {
  int vertex_count = 0;
  std::vector<RibbonGraphEdge> edges;

  /// Components as sorted ribbon-id lists ordered by smallest id.
  std::vector<std::vector<int>> components() const;
};

RibbonGraph ribbon_graph(const BracedFramework& braced);
/// Ribbon-graph edges with at least one braced shared 4-cycle; witnesses are
/// the braced ones.
RibbonGraph bracing_graph(const BracedFramework& braced);

enum class RigidityStatus { kRigid, kFlexible };
std::string_view to_string(RigidityStatus s);

struct Verdict {
  RigidityStatus status = RigidityStatus::kFlexible;
  std::vector<std::vector<int>> bracing_components;
  /// 2^c - 2; empty when it does not fit in 64 bits.
  std::optional<std::uint64_t> cartesian_nac_count;
  int ribbon_count = 0;
  int min_braces_possible = 0;  ///< ribbon_count - 1
  bool unbraced = false;
};

/// Throws kSeparationViolated unless the graph is ribbon-cutting and every
/// two vertices are separated by a ribbon. The details name the non-cut
/// ribbons or the first unseparated pair.
void require_separation(const PFramework& pf);

/// Rigid iff the bracing graph is connected. Refuses via require_separation.
Verdict rigidity_verdict(const BracedFramework& braced);

struct CompletionResult {
  std::vector<IdPair> added_braces;
  std::optional<std::string> infeasible_reason;
  bool feasible() const { return !infeasible_reason; }
};

/// Fewest new braces connecting the bracing graph: a spanning forest over the
/// bracing components, linked through unbraced ribbon-graph edges.
CompletionResult minimal_brace_completion(const BracedFramework& braced);

}  // namespace bracerig
