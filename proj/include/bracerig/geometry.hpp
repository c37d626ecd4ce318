#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "bracerig/graph.hpp"
#include "bracerig/ribbons.hpp"

namespace bracerig {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;
using Point = Point2<double>;

inline constexpr double kDefaultEpsilon = 1e-9;

/// kDefaultEpsilon unless BRACE_RIG_EPS holds a finite non-negative number.
double default_epsilon();

template <typename Scalar>
Scalar cross(const Point2<Scalar>& a, const Point2<Scalar>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

/// Rotation by angle t, clockwise for increasing t:
///   [ cos t   sin t ]
///   [-sin t   cos t ]
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 2> clockwise_rotation(Scalar t) {
  using std::cos;
  using std::sin;
  Eigen::Matrix<Scalar, 2, 2> r;
  r << cos(t), sin(t), -sin(t), cos(t);
  return r;
}

/// Coordinates indexed by the vertex indices of one graph, plus the slack
/// used by every geometric predicate on them.
class Placement {
 public:
  Placement() = default;
  explicit Placement(std::vector<Point> coords, double epsilon = kDefaultEpsilon)
      : coords_(std::move(coords)), epsilon_(epsilon) {}

  /// Throws kMissingCoordinate if a vertex of g has no entry.
  static Placement from_map(const StructuralGraph& g, const std::map<VertexId, Point>& coords,
                            double epsilon = kDefaultEpsilon);

  const Point& operator[](Vertex v) const { return coords_[v]; }
  Point& operator[](Vertex v) { return coords_[v]; }
  std::size_t size() const { return coords_.size(); }
  std::span<const Point> coords() const { return coords_; }
  double epsilon() const { return epsilon_; }

  bool coincide(Vertex a, Vertex b) const { return (coords_[a] - coords_[b]).norm() <= epsilon_; }

 private:
  std::vector<Point> coords_;
  double epsilon_ = kDefaultEpsilon;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::pair<Vertex, Vertex>> coincident_pairs;
  std::vector<FourCycle> open_cycles;  ///< 4-cycles that do not close as parallelograms
  std::vector<std::array<Vertex, 3>> triangles;

  std::string summary(const StructuralGraph& g) const;
};

/// ok iff the placement is injective and every 4-cycle is a parallelogram,
/// both within the placement's epsilon. Triangles are reported but do not
/// affect ok. Throws kMissingCoordinate on a size mismatch.
ValidationReport validate_parallelogram_placement(const StructuralGraph& g, const Placement& p);

/// A graph with a parallelogram placement and its ribbons. The placement is
/// validated on construction (kInvalidPlacement); ribbon-cutting is recorded
/// rather than enforced so that non-cutting inputs can still be classified.
class PFramework {
 public:
  PFramework(StructuralGraph graph, Placement placement);

  const StructuralGraph& graph() const { return graph_; }
  const Placement& placement() const { return placement_; }
  const RibbonPartition& partition() const { return partition_; }
  const RibbonCuttingReport& cutting() const { return cutting_; }
  bool ribbon_cutting() const { return cutting_.ribbon_cutting; }
  double epsilon() const { return placement_.epsilon(); }

  const Point& position(std::string_view id) const { return placement_[graph_.vertex(id)]; }

 private:
  StructuralGraph graph_;
  Placement placement_;
  RibbonPartition partition_;
  RibbonCuttingReport cutting_;
};

/// Builds the graph from the coordinate keys and the edge list.
PFramework make_pframework(const std::map<VertexId, Point>& coords, const std::vector<IdPair>& edges,
                           double epsilon = kDefaultEpsilon);

/// Coordinates keyed by vertex id.
std::map<VertexId, Point> coordinate_map(const StructuralGraph& g, const Placement& p);

/// Shortest placed edge length.
double shortest_edge(const StructuralGraph& g, const Placement& p);

/// Vertices of an edge-cut ribbon's complement not in the component of vertex 0.
std::vector<Vertex> moving_side(const Ribbon& r);

/// Translates the side not containing the smallest vertex by t. Throws
/// kNotEdgeCut or kForbiddenTranslation (t would make two vertices coincide).
Placement translate_side(const PFramework& pf, int ribbon, const Point& t);

/// Common vector rho(u2) - rho(u1) of the ribbon's edges, oriented from the
/// side containing the smallest vertex. Throws kRibbonNotSimpleCut or
/// kInconsistentRibbon.
Point ribbon_translation_vector(const StructuralGraph& g, const RibbonPartition& partition,
                                const Placement& p, int ribbon);
Point ribbon_translation_vector(const PFramework& pf, int ribbon);

}  // namespace bracerig
