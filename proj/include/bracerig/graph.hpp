#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bracerig {

/// Opaque vertex name. All deterministic choices use its lexicographic order.
using VertexId = std::string;
using IdPair = std::pair<VertexId, VertexId>;

/// Dense vertex index. Indices follow the lexicographic order of the ids, so
/// "smallest vertex" and "vertex 0" coincide.
using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// A 4-cycle (u1,u2,u3,u4) stored with the smallest vertex first and its
/// smaller cycle-neighbour second.
struct FourCycle {
  std::array<Vertex, 4> vertices{};

  /// Boundary edges u1u2, u2u3, u3u4, u4u1.
  std::array<Edge, 4> edges() const;
  /// Diagonals u1u3 and u2u4.
  std::array<Edge, 2> diagonals() const;
  bool contains(Vertex x) const;

  friend auto operator<=>(const FourCycle&, const FourCycle&) = default;
};

FourCycle canonical_four_cycle(std::array<Vertex, 4> cycle);

/// Connected simple graph on named vertices. Immutable after construction;
/// the 4-cycle list is computed once in the constructor.
class StructuralGraph {
 public:
  /// Throws Error with kInvalidArgument (no vertices), kDuplicateVertex,
  /// kUnknownVertex, kSelfLoop, kDuplicateEdge or kDisconnectedGraph.
  StructuralGraph(std::vector<VertexId> vertices, const std::vector<IdPair>& edges);

  std::size_t vertex_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const VertexId& id(Vertex v) const { return ids_[v]; }
  const std::vector<VertexId>& ids() const { return ids_; }
  std::optional<Vertex> find(std::string_view id) const;
  /// Throws kUnknownVertex.
  Vertex vertex(std::string_view id) const;

  /// Edges sorted lexicographically by (smaller id, larger id).
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  IdPair edge_ids(int e) const;
  std::vector<IdPair> edge_id_list() const;
  std::optional<int> edge_index(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_[v];
  }

  std::span<const FourCycle> four_cycles() const { return four_cycles_; }
  /// Indices into four_cycles() of the cycles using edge e.
  std::span<const int> cycles_of_edge(int e) const {
    return cycles_of_edge_[e];
  }

 private:
  static std::uint64_t key(Vertex a, Vertex b);

  std::vector<VertexId> ids_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, int> edge_lookup_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<FourCycle> four_cycles_;
  std::vector<std::vector<int>> cycles_of_edge_;
};

StructuralGraph build_structural_graph(std::vector<VertexId> vertices,
                                       const std::vector<IdPair>& edges);

/// All distinct 4-cycles in canonical form, sorted.
std::vector<FourCycle> enumerate_four_cycles(const StructuralGraph& g);

/// Vertex labels of the connected components of (V, edges accepted by keep).
/// Components are numbered by their smallest vertex.
template <typename EdgePredicate>
std::vector<int> component_labels(const StructuralGraph& g, EdgePredicate keep, int* count);

/// Weighted quick-union with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  int find(int x);
  bool unite(int a, int b);

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

// ---------------------------------------------------------------------------

template <typename EdgePredicate>
std::vector<int> component_labels(const StructuralGraph& g, EdgePredicate keep, int* count) {
  const auto n = g.vertex_count();
  std::vector<int> label(n, -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (label[y] >= 0) continue;
        if (!keep(*g.edge_index(x, y))) continue;
        label[y] = next;
        stack.push_back(y);
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return label;
}

}  // namespace bracerig
