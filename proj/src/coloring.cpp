#include "bracerig/coloring.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "bracerig/error.hpp"
#include "bracerig/rigidity.hpp"

namespace bracerig {

std::string_view to_string(Color c) { return c == Color::kRed ? "red" : "blue"; }

EdgeColoring::EdgeColoring(const StructuralGraph& g, std::vector<Color> colors)
    : colors_(std::move(colors)) {
  if (colors_.size() != g.edge_count()) {
    throw Error(ErrorCode::kPartialColoring,
                "coloring has " + std::to_string(colors_.size()) + " entries for " +
                    std::to_string(g.edge_count()) + " edges");
  }
  red_ = component_labels(g, [&](int e) { return colors_[e] == Color::kRed; }, &red_count_);
  blue_ = component_labels(g, [&](int e) { return colors_[e] == Color::kBlue; }, &blue_count_);
}

EdgeColoring EdgeColoring::from_map(const StructuralGraph& g, const std::map<IdPair, Color>& colors) {
  std::vector<std::optional<Color>> slots(g.edge_count());
  for (const auto& [pair, c] : colors) {
    const Vertex a = g.vertex(pair.first);
    const Vertex b = g.vertex(pair.second);
    const auto e = g.edge_index(a, b);
    if (!e) {
      throw Error(ErrorCode::kNotAnEdge, pair.first + "-" + pair.second + " is not an edge",
                  {{"edge", {pair.first, pair.second}}});
    }
    slots[*e] = c;
  }
  std::vector<Color> out;
  for (std::size_t e = 0; e < slots.size(); ++e) {
    if (!slots[e]) {
      const auto [a, b] = g.edge_ids(static_cast<int>(e));
      throw Error(ErrorCode::kPartialColoring, "edge " + a + "-" + b + " has no color",
                  {{"edge", {a, b}}});
    }
    out.push_back(*slots[e]);
  }
  return EdgeColoring(g, std::move(out));
}

std::map<IdPair, Color> EdgeColoring::to_map(const StructuralGraph& g) const {
  std::map<IdPair, Color> out;
  for (std::size_t e = 0; e < colors_.size(); ++e) out.emplace(g.edge_ids(static_cast<int>(e)), colors_[e]);
  return out;
}

EdgeColoring EdgeColoring::swapped(const StructuralGraph& g) const {
  std::vector<Color> flipped;
  for (Color c : colors_) flipped.push_back(opposite(c));
  return EdgeColoring(g, std::move(flipped));
}

namespace {

std::vector<Vertex> shortest_path(const StructuralGraph& g, const EdgeColoring& coloring, Color c,
                                  Vertex from, Vertex to) {
  std::vector<Vertex> parent(g.vertex_count(), -1);
  std::deque<Vertex> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (Vertex y : g.neighbors(x)) {
      if (parent[y] >= 0 || coloring.color(*g.edge_index(x, y)) != c) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  std::vector<Vertex> path;
  for (Vertex x = to; x != from; x = parent[x]) path.push_back(x);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

NacStatus check_nac(const StructuralGraph& g, const EdgeColoring& coloring) {
  NacStatus status;
  const auto& colors = coloring.colors();
  status.surjective = std::find(colors.begin(), colors.end(), Color::kRed) != colors.end() &&
                      std::find(colors.begin(), colors.end(), Color::kBlue) != colors.end();
  if (!status.surjective) {
    status.witness = NacWitness{NacWitness::Kind::kNotSurjective, std::nullopt, {}, std::nullopt};
    return status;
  }
  for (std::size_t e = 0; e < colors.size(); ++e) {
    const Edge& edge = g.edge(static_cast<int>(e));
    const Color other = opposite(colors[e]);
    if (coloring.label(other, edge.u) == coloring.label(other, edge.v)) {
      status.witness = NacWitness{NacWitness::Kind::kAlmostCycle, edge,
                                  shortest_path(g, coloring, other, edge.u, edge.v), std::nullopt};
      return status;
    }
  }
  status.is_nac = true;

  std::map<std::pair<int, int>, Vertex> cell;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    const auto v = static_cast<Vertex>(s);
    auto [it, inserted] = cell.emplace(std::pair(coloring.red_label(v), coloring.blue_label(v)), v);
    if (!inserted) {
      status.witness =
          NacWitness{NacWitness::Kind::kRedAndBluePath, std::nullopt, {}, std::pair(it->second, v)};
      return status;
    }
  }
  status.is_cartesian = true;
  return status;
}

NacStatus check_cartesian(const StructuralGraph& g, const EdgeColoring& coloring) {
  return check_nac(g, coloring);
}

CartesianNacEnumeration::CartesianNacEnumeration(const BracedFramework& braced)
    : combined_(&braced.combined_graph()) {
  const auto& pf = braced.pframework();
  bool verified = pf.ribbon_cutting();
  if (verified) verified = check_separation(pf.graph(), pf.partition()).all_separated;
  if (!verified) {
    fallback_ = brute_force_nac_oracle(*combined_, true);
    size_ = fallback_->size();
    return;
  }

  components_ = bracing_graph(braced).components();
  if (components_.size() >= 64) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(components_.size()) + " bracing components are too many to index");
  }
  size_ = (std::uint64_t{1} << components_.size()) - 2;

  std::vector<int> component_of_ribbon(braced.partition().size());
  for (std::size_t k = 0; k < components_.size(); ++k) {
    for (int r : components_[k]) component_of_ribbon[r] = static_cast<int>(k);
  }
  const auto& g = braced.graph();
  component_of_edge_.resize(combined_->edge_count());
  for (std::size_t e = 0; e < combined_->edge_count(); ++e) {
    const Edge& ce = combined_->edge(static_cast<int>(e));
    if (auto se = g.edge_index(ce.u, ce.v)) {
      component_of_edge_[e] = component_of_ribbon[braced.partition().ribbon_of(*se)];
    } else {
      // A brace: its 4-cycle's two ribbons are linked, so either will do.
      const auto& braces = braced.braces();
      const auto b = std::lower_bound(braces.begin(), braces.end(), ce) - braces.begin();
      const auto& cycle = g.four_cycles()[braced.brace_cycles(static_cast<int>(b)).front()];
      const Edge side = cycle.edges()[0];
      component_of_edge_[e] = component_of_ribbon[braced.partition().ribbon_of(*g.edge_index(side.u, side.v))];
    }
  }
}

EdgeColoring CartesianNacEnumeration::at(std::uint64_t index) const {
  if (index >= size_) {
    throw Error(ErrorCode::kInvalidArgument,
                "coloring index " + std::to_string(index) + " out of range (" + std::to_string(size_) +
                    " colorings)",
                {{"index", index}, {"count", size_}});
  }
  if (fallback_) return (*fallback_)[index];
  const std::uint64_t counter = index + 1;
  std::vector<Color> colors;
  for (int k : component_of_edge_) colors.push_back(((counter >> k) & 1U) != 0 ? Color::kRed : Color::kBlue);
  return EdgeColoring(*combined_, std::move(colors));
}

std::vector<EdgeColoring> CartesianNacEnumeration::all() const {
  std::vector<EdgeColoring> out;
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(at(i));
  return out;
}

CartesianNacEnumeration enumerate_cartesian_nac(const BracedFramework& braced) {
  return CartesianNacEnumeration(braced);
}

std::vector<EdgeColoring> brute_force_nac_oracle(const StructuralGraph& g, bool cartesian_only) {
  const auto m = g.edge_count();
  if (m > kBruteForceEdgeLimit) {
    throw Error(ErrorCode::kTooLarge,
                "brute force is limited to " + std::to_string(kBruteForceEdgeLimit) + " edges, got " +
                    std::to_string(m),
                {{"edges", m}, {"limit", kBruteForceEdgeLimit}});
  }
  std::vector<EdgeColoring> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Color> colors;
    for (std::size_t e = 0; e < m; ++e) colors.push_back(((mask >> e) & 1U) != 0 ? Color::kRed : Color::kBlue);
    EdgeColoring coloring(g, std::move(colors));
    const auto status = check_nac(g, coloring);
    if (cartesian_only ? status.is_cartesian : status.is_nac) out.push_back(std::move(coloring));
  }
  return out;
}

VertexId product_vertex_id(std::string_view a, std::string_view b) {
  return "(" + std::string(a) + "," + std::string(b) + ")";
}

ProductColoring product_coloring(const StructuralGraph& first, const StructuralGraph& second) {
  if (first.vertex_count() < 2 || second.vertex_count() < 2) {
    throw Error(ErrorCode::kTrivialFactor, "both factors need at least two vertices",
                {{"first", first.vertex_count()}, {"second", second.vertex_count()}});
  }
  std::vector<VertexId> ids;
  std::vector<IdPair> edges;
  std::set<IdPair> red;
  for (const auto& a : first.ids()) {
    for (const auto& b : second.ids()) ids.push_back(product_vertex_id(a, b));
  }
  for (const auto& [a1, a2] : first.edge_id_list()) {
    for (const auto& b : second.ids()) {
      edges.emplace_back(product_vertex_id(a1, b), product_vertex_id(a2, b));
      red.insert(edges.back());
    }
  }
  for (const auto& a : first.ids()) {
    for (const auto& [b1, b2] : second.edge_id_list()) {
      edges.emplace_back(product_vertex_id(a, b1), product_vertex_id(a, b2));
    }
  }
  StructuralGraph product(std::move(ids), edges);
  std::vector<Color> colors;
  for (std::size_t e = 0; e < product.edge_count(); ++e) {
    const auto [x, y] = product.edge_ids(static_cast<int>(e));
    colors.push_back(red.count({x, y}) != 0 || red.count({y, x}) != 0 ? Color::kRed : Color::kBlue);
  }
  EdgeColoring coloring(product, std::move(colors));
  return {std::move(product), std::move(coloring)};
}

QuotientEmbedding product_embedding(const StructuralGraph& g, const EdgeColoring& coloring) {
  if (!check_cartesian(g, coloring).is_cartesian) {
    throw Error(ErrorCode::kNotCartesian, "coloring is not a cartesian NAC-coloring");
  }
  QuotientEmbedding q;
  q.q1_vertices = coloring.red_count();
  q.q2_vertices = coloring.blue_count();
  std::set<std::pair<int, int>> q1;
  std::set<std::pair<int, int>> q2;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(static_cast<int>(e));
    if (coloring.color(static_cast<int>(e)) == Color::kBlue) {
      const int a = coloring.red_label(edge.u);
      const int b = coloring.red_label(edge.v);
      q1.insert({std::min(a, b), std::max(a, b)});
    } else {
      const int a = coloring.blue_label(edge.u);
      const int b = coloring.blue_label(edge.v);
      q2.insert({std::min(a, b), std::max(a, b)});
    }
  }
  q.q1_edges.assign(q1.begin(), q1.end());
  q.q2_edges.assign(q2.begin(), q2.end());
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    const auto v = static_cast<Vertex>(s);
    q.h.emplace_back(coloring.red_label(v), coloring.blue_label(v));
  }

  q.injective = std::set(q.h.begin(), q.h.end()).size() == q.h.size();
  q.morphism = true;
  for (const Edge& edge : g.edges()) {
    const auto [r1, b1] = q.h[edge.u];
    const auto [r2, b2] = q.h[edge.v];
    const bool along_q1 = b1 == b2 && r1 != r2 && q1.count({std::min(r1, r2), std::max(r1, r2)}) != 0;
    const bool along_q2 = r1 == r2 && b1 != b2 && q2.count({std::min(b1, b2), std::max(b1, b2)}) != 0;
    q.morphism = q.morphism && (along_q1 || along_q2);
  }
  std::set<int> reds;
  std::set<int> blues;
  for (auto [r, b] : q.h) {
    reds.insert(r);
    blues.insert(b);
  }
  q.covers = static_cast<int>(reds.size()) == q.q1_vertices && static_cast<int>(blues.size()) == q.q2_vertices;
  return q;
}

}  // namespace bracerig
