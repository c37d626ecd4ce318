#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "bracerig/geometry.hpp"

namespace bracerig {

/// Extends the edge uv by a new parallelogram u-w1-w2-v. The offset of the
/// new side is drawn from a generator seeded with `seed`, has half the median
/// edge length and avoids every existing vertex.
PFramework add_four_cycle(const PFramework& pf, std::string_view u, std::string_view v,
                          std::uint64_t seed = 0);

/// Is v separated from every vertex other than u, v, w by a ribbon that
/// contains neither uv nor vw? On failure, *blocking receives such a vertex.
bool close_precondition_holds(const PFramework& pf, Vertex u, Vertex v, Vertex w,
                              Vertex* blocking = nullptr);

enum class CloseMode {
  /// Refuse up front when close_precondition_holds is false.
  kCheckPrecondition,
  /// Skip the test and search translations of every separating ribbon; fail
  /// only if no injective extension is found.
  kConstructive,
};

/// Adds w' adjacent to u and w with rho(w') = rho(u) + rho(w) - rho(v),
/// re-placing sides of ribbons first when u, v, w are collinear or w' would
/// land on an existing vertex. Throws kNotAnEdge or kSeparationViolated.
PFramework close_four_cycle(const PFramework& pf, std::string_view u, std::string_view v,
                            std::string_view w, CloseMode mode = CloseMode::kCheckPrecondition);

struct Parallelogram {
  std::array<Point, 4> corners;  ///< cyclic order
};

/// One-skeleton of a carpet of parallelograms. Corners closer than epsilon
/// are merged; vertex ids are "c000", "c001", ... in (x, y) order. Throws
/// kDegenerateParallelogram, kBadIntersection or kBoundaryNotSimple.
PFramework carpet_to_framework(std::span<const Parallelogram> parallelograms,
                               double epsilon = kDefaultEpsilon);

/// a by b unit cells; vertex (i, j) sits at (i, j).
PFramework generate_grid(int a, int b);

/// Vertex id used by generate_grid.
VertexId grid_vertex_id(int a, int b, int i, int j);

/// Random sequence of Add4-cycle / Close4-cycle moves starting from the unit
/// square. Stops early once max_vertices (0 = unlimited) would be exceeded
/// and no Close4-cycle move is available.
PFramework generate_random_grec(int steps, std::uint64_t seed, std::size_t max_vertices = 0);

}  // namespace bracerig
