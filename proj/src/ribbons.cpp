#include "bracerig/ribbons.hpp"

#include <algorithm>

#include "bracerig/error.hpp"

namespace bracerig {
namespace {

std::vector<std::vector<Vertex>> group_components(const std::vector<int>& label, int count) {
  std::vector<std::vector<Vertex>> out(count);
  for (std::size_t v = 0; v < label.size(); ++v) out[label[v]].push_back(static_cast<Vertex>(v));
  return out;
}

}  // namespace

RibbonPartition compute_ribbons(const StructuralGraph& g) {
  const auto m = g.edge_count();
  DisjointSets sets(m);
  for (const FourCycle& c : g.four_cycles()) {
    const auto e = c.edges();
    const int e01 = *g.edge_index(e[0].u, e[0].v);
    const int e12 = *g.edge_index(e[1].u, e[1].v);
    const int e23 = *g.edge_index(e[2].u, e[2].v);
    const int e30 = *g.edge_index(e[3].u, e[3].v);
    sets.unite(e01, e23);
    sets.unite(e12, e30);
  }

  // Edges are sorted, so the first time a root is seen gives the ribbon order.
  std::vector<int> ribbon_of(m, -1);
  std::vector<int> id_of_root(m, -1);
  std::vector<Ribbon> ribbons;
  for (std::size_t e = 0; e < m; ++e) {
    const int root = sets.find(static_cast<int>(e));
    if (id_of_root[root] < 0) {
      id_of_root[root] = static_cast<int>(ribbons.size());
      ribbons.emplace_back().id = id_of_root[root];
    }
    ribbon_of[e] = id_of_root[root];
    ribbons[id_of_root[root]].edges.push_back(static_cast<int>(e));
  }

  for (const FourCycle& c : g.four_cycles()) {
    const auto e = c.edges();
    const int r = ribbon_of[*g.edge_index(e[0].u, e[0].v)];
    if (std::all_of(e.begin(), e.end(),
                    [&](const Edge& x) { return ribbon_of[*g.edge_index(x.u, x.v)] == r; })) {
      ribbons[r].is_simple = false;
    }
  }

  for (Ribbon& r : ribbons) {
    int count = 0;
    r.component_of = component_labels(g, [&](int e) { return ribbon_of[e] != r.id; }, &count);
    r.components = group_components(r.component_of, count);
    r.is_edge_cut = count >= 2;
  }
  return RibbonPartition(std::move(ribbon_of), std::move(ribbons));
}

CutResult is_edge_cut(const StructuralGraph& g, const RibbonPartition& partition, int ribbon) {
  if (ribbon < 0 || static_cast<std::size_t>(ribbon) >= partition.size()) {
    throw Error(ErrorCode::kInvalidArgument, "no ribbon " + std::to_string(ribbon));
  }
  int count = 0;
  const auto label =
      component_labels(g, [&](int e) { return partition.ribbon_of(e) != ribbon; }, &count);
  return CutResult{count >= 2, group_components(label, count)};
}

RibbonCuttingReport classify_ribbon_cutting(const StructuralGraph&,
                                            const RibbonPartition& partition) {
  RibbonCuttingReport report;
  for (const Ribbon& r : partition.ribbons()) {
    if (!r.is_edge_cut) report.offending_ribbons.push_back(r.id);
  }
  report.ribbon_cutting = report.offending_ribbons.empty();
  return report;
}

RibbonCuttingReport classify_ribbon_cutting(const StructuralGraph& g) {
  return classify_ribbon_cutting(g, compute_ribbons(g));
}

Parity walk_crossing_parity(const StructuralGraph& g, const RibbonPartition& partition,
                            std::span<const Vertex> walk, int ribbon) {
  const Ribbon& r = partition.ribbon(ribbon);
  if (!r.is_simple || !r.is_edge_cut) {
    throw Error(ErrorCode::kRibbonNotSimpleCut,
                "ribbon " + std::to_string(ribbon) + " is not a simple edge cut");
  }
  int crossings = 0;
  for (std::size_t i = 1; i < walk.size(); ++i) {
    const auto e = g.edge_index(walk[i - 1], walk[i]);
    if (!e) throw Error(ErrorCode::kInvalidWalk, "walk step " + std::to_string(i) + " is not an edge");
    if (partition.ribbon_of(*e) == ribbon) ++crossings;
  }
  return crossings % 2 == 0 ? Parity::kEven : Parity::kOdd;
}

std::optional<int> separating_ribbon(const StructuralGraph&, const RibbonPartition& partition,
                                     Vertex a, Vertex b, std::span<const int> excluded_edges) {
  for (const Ribbon& r : partition.ribbons()) {
    if (!r.is_edge_cut || !r.separates(a, b)) continue;
    const bool excluded = std::any_of(excluded_edges.begin(), excluded_edges.end(),
                                      [&](int e) { return partition.ribbon_of(e) == r.id; });
    if (!excluded) return r.id;
  }
  return std::nullopt;
}

SeparationReport check_separation(const StructuralGraph& g, const RibbonPartition& partition) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!separating_ribbon(g, partition, a, b)) return {false, std::make_pair(a, b)};
    }
  }
  return {};
}

}  // namespace bracerig
