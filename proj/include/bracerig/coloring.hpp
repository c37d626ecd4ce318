#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "bracerig/graph.hpp"

namespace bracerig {

class BracedFramework;

enum class Color : std::uint8_t { kRed, kBlue };
std::string_view to_string(Color c);
inline Color opposite(Color c) { return c == Color::kRed ? Color::kBlue : Color::kRed; }

/// Red/blue assignment on the edges of one graph, with the vertex labels of
/// the components of the red and the blue subgraph.
class EdgeColoring {
 public:
  /// Throws kPartialColoring unless there is one color per edge.
  EdgeColoring(const StructuralGraph& g, std::vector<Color> colors);

  /// Throws kPartialColoring if an edge has no entry, kNotAnEdge or
  /// kUnknownVertex for keys that are not edges of g.
  static EdgeColoring from_map(const StructuralGraph& g, const std::map<IdPair, Color>& colors);

  const std::vector<Color>& colors() const { return colors_; }
  Color color(int edge) const { return colors_[edge]; }
  std::map<IdPair, Color> to_map(const StructuralGraph& g) const;

  /// Component label of v in the red (blue) subgraph on all vertices.
  int red_label(Vertex v) const { return red_[v]; }
  int blue_label(Vertex v) const { return blue_[v]; }
  int red_count() const { return red_count_; }
  int blue_count() const { return blue_count_; }
  int label(Color c, Vertex v) const { return c == Color::kRed ? red_[v] : blue_[v]; }

  EdgeColoring swapped(const StructuralGraph& g) const;

  friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) { return a.colors_ == b.colors_; }
  friend bool operator<(const EdgeColoring& a, const EdgeColoring& b) { return a.colors_ < b.colors_; }

 private:
  std::vector<Color> colors_;
  std::vector<int> red_;
  std::vector<int> blue_;
  int red_count_ = 0;
  int blue_count_ = 0;
};

struct NacWitness {
  enum class Kind { kNotSurjective, kAlmostCycle, kRedAndBluePath };
  Kind kind = Kind::kNotSurjective;
  /// kAlmostCycle: the edge whose endpoints the opposite color connects, and
  /// a shortest such path from edge.u to edge.v.
  std::optional<Edge> edge;
  std::vector<Vertex> path;
  /// kRedAndBluePath: two vertices joined by a red and by a blue path.
  std::optional<std::pair<Vertex, Vertex>> pair;
};

struct NacStatus {
  bool surjective = false;
  bool is_nac = false;
  bool is_cartesian = false;
  std::optional<NacWitness> witness;  ///< about the first flag that is false
};

/// NAC iff surjective and no edge has both endpoints in one component of the
/// other color. Also fills is_cartesian.
NacStatus check_nac(const StructuralGraph& g, const EdgeColoring& coloring);
/// Cartesian iff NAC and no red component shares two vertices with a blue one.
NacStatus check_cartesian(const StructuralGraph& g, const EdgeColoring& coloring);

/// All cartesian NAC-colorings of a braced framework's combined graph. When
/// the framework is ribbon-cutting with all pairs separated, coloring n
/// paints bracing component i red iff bit i of n + 1 is set (components
/// ordered by smallest ribbon id). Otherwise it falls back to the brute-force
/// oracle and flags precondition_unverified.
class CartesianNacEnumeration {
 public:
  /// Throws kTooLarge with 64 or more bracing components, or when the
  /// fallback would exceed the brute-force limit.
  explicit CartesianNacEnumeration(const BracedFramework& braced);

  std::uint64_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  EdgeColoring at(std::uint64_t index) const;
  std::vector<EdgeColoring> all() const;

  bool precondition_unverified() const { return fallback_.has_value(); }
  const std::vector<std::vector<int>>& components() const { return components_; }

 private:
  const StructuralGraph* combined_;
  std::vector<int> component_of_edge_;  ///< combined-graph edge -> bracing component
  std::vector<std::vector<int>> components_;
  std::uint64_t size_ = 0;
  std::optional<std::vector<EdgeColoring>> fallback_;
};

/// The enumeration borrows braced's combined graph; keep braced alive.
CartesianNacEnumeration enumerate_cartesian_nac(const BracedFramework& braced);

inline constexpr std::size_t kBruteForceEdgeLimit = 24;

/// Every (cartesian) NAC-coloring by exhaustive scan. Throws kTooLarge above
/// kBruteForceEdgeLimit edges.
std::vector<EdgeColoring> brute_force_nac_oracle(const StructuralGraph& g, bool cartesian_only);

struct ProductColoring {
  StructuralGraph graph;  ///< vertex ids "(g,h)"
  EdgeColoring coloring;  ///< edges from the first factor red
};

/// Cartesian product with its canonical cartesian NAC-coloring. Throws
/// kTrivialFactor if a factor has fewer than two vertices.
ProductColoring product_coloring(const StructuralGraph& first, const StructuralGraph& second);

VertexId product_vertex_id(std::string_view a, std::string_view b);

/// Quotients by the red and by the blue components and the map
/// v -> (red component, blue component).
struct QuotientEmbedding {
  int q1_vertices = 0;                      ///< red components
  int q2_vertices = 0;                      ///< blue components
  std::vector<std::pair<int, int>> q1_edges;  ///< red components joined by a blue edge
  std::vector<std::pair<int, int>> q2_edges;  ///< blue components joined by a red edge
  std::vector<std::pair<int, int>> h;
  bool injective = false;
  bool morphism = false;  ///< every edge maps to an edge of q1 x q2
  bool covers = false;    ///< every quotient vertex is a coordinate of some h(v)
};

/// Throws kNotCartesian.
QuotientEmbedding product_embedding(const StructuralGraph& g, const EdgeColoring& coloring);

}  // namespace bracerig
