#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bracerig/graph.hpp"

namespace bracerig {

/// Equivalence class of edges under the closure of "opposite in a 4-cycle".
struct Ribbon {
  int id = 0;
  std::vector<int> edges;  ///< edge indices, ascending
  bool is_simple = true;   ///< no 4-cycle uses only edges of this ribbon
  bool is_edge_cut = false;
  /// Components of G minus the ribbon, each sorted, ordered by smallest vertex.
  /// When the ribbon is an edge cut these are its sides.
  std::vector<std::vector<Vertex>> components;
  /// component_of[v] indexes into components.
  std::vector<int> component_of;

  bool separates(Vertex a, Vertex b) const { return component_of[a] != component_of[b]; }
};

class RibbonPartition {
 public:
  RibbonPartition(std::vector<int> ribbon_of, std::vector<Ribbon> ribbons)
      : ribbon_of_(std::move(ribbon_of)), ribbons_(std::move(ribbons)) {}

  int ribbon_of(int edge) const { return ribbon_of_[edge]; }
  const std::vector<int>& ribbon_map() const { return ribbon_of_; }
  const Ribbon& ribbon(int id) const { return ribbons_[id]; }
  std::span<const Ribbon> ribbons() const { return ribbons_; }
  std::size_t size() const { return ribbons_.size(); }

 private:
  std::vector<int> ribbon_of_;
  std::vector<Ribbon> ribbons_;
};

/// Ribbon ids are assigned in order of each ribbon's smallest edge.
RibbonPartition compute_ribbons(const StructuralGraph& g);

struct CutResult {
  bool cut = false;
  std::vector<std::vector<Vertex>> components;
};

/// Recomputes the components of (V, E minus the ribbon).
CutResult is_edge_cut(const StructuralGraph& g, const RibbonPartition& partition, int ribbon);

struct RibbonCuttingReport {
  bool ribbon_cutting = true;
  std::vector<int> offending_ribbons;
};

RibbonCuttingReport classify_ribbon_cutting(const StructuralGraph& g,
                                            const RibbonPartition& partition);
RibbonCuttingReport classify_ribbon_cutting(const StructuralGraph& g);

enum class Parity { kEven, kOdd };

/// Parity of the number of walk steps that traverse an edge of the ribbon.
/// Throws kRibbonNotSimpleCut unless the ribbon is simple and an edge cut,
/// kInvalidWalk if consecutive walk vertices are not adjacent.
Parity walk_crossing_parity(const StructuralGraph& g, const RibbonPartition& partition,
                            std::span<const Vertex> walk, int ribbon);

/// Smallest-id edge-cut ribbon with a and b on different sides that contains
/// none of excluded_edges.
std::optional<int> separating_ribbon(const StructuralGraph& g, const RibbonPartition& partition,
                                     Vertex a, Vertex b,
                                     std::span<const int> excluded_edges = {});

struct SeparationReport {
  bool all_separated = true;
  std::optional<std::pair<Vertex, Vertex>> unseparated;  ///< first failing pair
};

/// Exhaustive pair scan: is every pair of distinct vertices separated by a ribbon?
SeparationReport check_separation(const StructuralGraph& g, const RibbonPartition& partition);

}  // namespace bracerig
