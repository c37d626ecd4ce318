#include "bracerig/geometry.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "bracerig/error.hpp"

namespace bracerig {

double default_epsilon() {
  if (const char* env = std::getenv("BRACE_RIG_EPS")) {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end != env && *end == '\0' && std::isfinite(value) && value >= 0.0) return value;
  }
  return kDefaultEpsilon;
}

Placement Placement::from_map(const StructuralGraph& g, const std::map<VertexId, Point>& coords,
                              double epsilon) {
  std::vector<Point> out;
  out.reserve(g.vertex_count());
  for (const VertexId& id : g.ids()) {
    auto it = coords.find(id);
    if (it == coords.end()) {
      throw Error(ErrorCode::kMissingCoordinate, "no coordinate for vertex '" + id + "'",
                  {{"vertex", id}});
    }
    out.push_back(it->second);
  }
  return Placement(std::move(out), epsilon);
}

std::string ValidationReport::summary(const StructuralGraph& g) const {
  std::ostringstream out;
  for (const auto& [a, b] : coincident_pairs) {
    out << "coincident vertices " << g.id(a) << ", " << g.id(b) << "; ";
  }
  for (const FourCycle& c : open_cycles) {
    out << "4-cycle (" << g.id(c.vertices[0]) << "," << g.id(c.vertices[1]) << ","
        << g.id(c.vertices[2]) << "," << g.id(c.vertices[3]) << ") is not a parallelogram; ";
  }
  for (const auto& t : triangles) {
    out << "3-cycle (" << g.id(t[0]) << "," << g.id(t[1]) << "," << g.id(t[2]) << "); ";
  }
  return out.str();
}

ValidationReport validate_parallelogram_placement(const StructuralGraph& g, const Placement& p) {
  if (p.size() != g.vertex_count()) {
    throw Error(ErrorCode::kMissingCoordinate,
                "placement has " + std::to_string(p.size()) + " coordinates for " +
                    std::to_string(g.vertex_count()) + " vertices");
  }
  ValidationReport report;
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (p.coincide(a, b)) report.coincident_pairs.emplace_back(a, b);
    }
  }
  for (const FourCycle& c : g.four_cycles()) {
    const auto& v = c.vertices;
    if ((p[v[0]] - p[v[1]] + p[v[2]] - p[v[3]]).norm() > p.epsilon()) {
      report.open_cycles.push_back(c);
    }
  }
  for (const Edge& e : g.edges()) {
    for (Vertex w : g.neighbors(e.v)) {
      if (w > e.v && g.adjacent(e.u, w)) report.triangles.push_back({e.u, e.v, w});
    }
  }
  report.ok = report.coincident_pairs.empty() && report.open_cycles.empty();
  return report;
}

PFramework::PFramework(StructuralGraph graph, Placement placement)
    : graph_(std::move(graph)),
      placement_(std::move(placement)),
      partition_(compute_ribbons(graph_)) {
  const auto report = validate_parallelogram_placement(graph_, placement_);
  if (!report.ok) {
    nlohmann::json details;
    details["coincident_pairs"] = nlohmann::json::array();
    for (const auto& [a, b] : report.coincident_pairs) {
      details["coincident_pairs"].push_back({graph_.id(a), graph_.id(b)});
    }
    details["open_cycles"] = nlohmann::json::array();
    for (const FourCycle& c : report.open_cycles) {
      nlohmann::json cyc = nlohmann::json::array();
      for (Vertex v : c.vertices) cyc.push_back(graph_.id(v));
      details["open_cycles"].push_back(cyc);
    }
    throw Error(ErrorCode::kInvalidPlacement,
                "not a parallelogram placement: " + report.summary(graph_), details);
  }
  cutting_ = classify_ribbon_cutting(graph_, partition_);
}

PFramework make_pframework(const std::map<VertexId, Point>& coords, const std::vector<IdPair>& edges,
                           double epsilon) {
  std::vector<VertexId> ids;
  ids.reserve(coords.size());
  for (const auto& entry : coords) ids.push_back(entry.first);
  StructuralGraph g(std::move(ids), edges);
  Placement p = Placement::from_map(g, coords, epsilon);
  return PFramework(std::move(g), std::move(p));
}

std::map<VertexId, Point> coordinate_map(const StructuralGraph& g, const Placement& p) {
  std::map<VertexId, Point> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out.emplace(g.id(static_cast<Vertex>(v)), p[static_cast<Vertex>(v)]);
  }
  return out;
}

double shortest_edge(const StructuralGraph& g, const Placement& p) {
  double best = std::numeric_limits<double>::infinity();
  for (const Edge& e : g.edges()) best = std::min(best, (p[e.u] - p[e.v]).norm());
  return best;
}

std::vector<Vertex> moving_side(const Ribbon& r) {
  std::vector<Vertex> out;
  const int anchor = r.component_of.front();
  for (std::size_t v = 0; v < r.component_of.size(); ++v) {
    if (r.component_of[v] != anchor) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

Placement translate_side(const PFramework& pf, int ribbon, const Point& t) {
  const Ribbon& r = pf.partition().ribbon(ribbon);
  if (!r.is_edge_cut) {
    throw Error(ErrorCode::kNotEdgeCut, "ribbon " + std::to_string(ribbon) + " is not an edge cut");
  }
  const Placement& p = pf.placement();
  const auto moving = moving_side(r);
  std::vector<bool> moves(p.size(), false);
  for (Vertex v : moving) moves[v] = true;

  // Forbidden set: t = rho(u1) - rho(u2) with u1 fixed and u2 moving.
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (moves[a]) continue;
    for (Vertex b : moving) {
      if ((p[static_cast<Vertex>(a)] - p[b] - t).norm() <= p.epsilon()) {
        const auto& g = pf.graph();
        throw Error(ErrorCode::kForbiddenTranslation,
                    "translation would place " + g.id(b) + " onto " +
                        g.id(static_cast<Vertex>(a)),
                    {{"fixed", g.id(static_cast<Vertex>(a))}, {"moving", g.id(b)}});
      }
    }
  }
  std::vector<Point> coords(p.coords().begin(), p.coords().end());
  for (Vertex v : moving) coords[v] += t;
  return Placement(std::move(coords), p.epsilon());
}

Point ribbon_translation_vector(const StructuralGraph& g, const RibbonPartition& partition,
                                const Placement& p, int ribbon) {
  const Ribbon& r = partition.ribbon(ribbon);
  if (!r.is_simple || !r.is_edge_cut) {
    throw Error(ErrorCode::kRibbonNotSimpleCut,
                "ribbon " + std::to_string(ribbon) + " is not a simple edge cut");
  }
  const int anchor = r.component_of.front();
  std::optional<Point> common;
  for (int e : r.edges) {
    const Edge& ed = g.edge(e);
    const bool u_fixed = r.component_of[ed.u] == anchor;
    const Point d = u_fixed ? Point(p[ed.v] - p[ed.u]) : Point(p[ed.u] - p[ed.v]);
    if (!common) {
      common = d;
    } else if ((*common - d).norm() > p.epsilon()) {
      const auto [a, b] = g.edge_ids(e);
      throw Error(ErrorCode::kInconsistentRibbon,
                  "edge " + a + "-" + b + " is not a translate of the other edges of ribbon " +
                      std::to_string(ribbon),
                  {{"edge", {a, b}}, {"ribbon", ribbon}});
    }
  }
  return *common;
}

Point ribbon_translation_vector(const PFramework& pf, int ribbon) {
  return ribbon_translation_vector(pf.graph(), pf.partition(), pf.placement(), ribbon);
}

}  // namespace bracerig
