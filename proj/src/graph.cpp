#include "bracerig/graph.hpp"

#include <algorithm>
#include <numeric>

#include "bracerig/error.hpp"

namespace bracerig {

std::array<Edge, 4> FourCycle::edges() const {
  const auto& c = vertices;
  return {make_edge(c[0], c[1]), make_edge(c[1], c[2]), make_edge(c[2], c[3]),
          make_edge(c[3], c[0])};
}

std::array<Edge, 2> FourCycle::diagonals() const {
  return {make_edge(vertices[0], vertices[2]), make_edge(vertices[1], vertices[3])};
}

bool FourCycle::contains(Vertex x) const {
  return std::find(vertices.begin(), vertices.end(), x) != vertices.end();
}

FourCycle canonical_four_cycle(std::array<Vertex, 4> c) {
  const auto first = std::min_element(c.begin(), c.end()) - c.begin();
  std::rotate(c.begin(), c.begin() + first, c.end());
  if (c[3] < c[1]) std::swap(c[1], c[3]);
  return FourCycle{c};
}

StructuralGraph::StructuralGraph(std::vector<VertexId> vertices,
                                 const std::vector<IdPair>& edges) {
  if (vertices.empty()) throw Error(ErrorCode::kInvalidArgument, "graph has no vertices");
  std::sort(vertices.begin(), vertices.end());
  if (auto dup = std::adjacent_find(vertices.begin(), vertices.end()); dup != vertices.end()) {
    throw Error(ErrorCode::kDuplicateVertex, "duplicate vertex '" + *dup + "'",
                {{"vertex", *dup}});
  }
  ids_ = std::move(vertices);
  for (std::size_t i = 0; i < ids_.size(); ++i) index_.emplace(ids_[i], static_cast<Vertex>(i));

  for (const auto& [a, b] : edges) {
    const Vertex u = vertex(a);
    const Vertex v = vertex(b);
    if (u == v) throw Error(ErrorCode::kSelfLoop, "self-loop at '" + a + "'", {{"vertex", a}});
    edges_.push_back(make_edge(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw Error(ErrorCode::kDuplicateEdge,
                "duplicate edge " + id(dup->u) + "-" + id(dup->v),
                {{"edge", {id(dup->u), id(dup->v)}}});
  }

  adjacency_.resize(ids_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    edge_lookup_.emplace(key(u, v), static_cast<int>(e));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

  int components = 0;
  const auto label = component_labels(*this, [](int) { return true; }, &components);
  if (components != 1) {
    const auto stray = std::find(label.begin(), label.end(), 1) - label.begin();
    throw Error(ErrorCode::kDisconnectedGraph,
                "graph is disconnected (" + std::to_string(components) + " components)",
                {{"components", components}, {"unreached", ids_[stray]}});
  }

  four_cycles_ = enumerate_four_cycles(*this);
  cycles_of_edge_.resize(edges_.size());
  for (std::size_t c = 0; c < four_cycles_.size(); ++c) {
    for (const Edge& e : four_cycles_[c].edges()) {
      cycles_of_edge_[*edge_index(e.u, e.v)].push_back(
          static_cast<int>(c));
    }
  }
}

std::uint64_t StructuralGraph::key(Vertex a, Vertex b) {
  const auto e = make_edge(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)) << 32) |
         static_cast<std::uint32_t>(e.v);
}

std::optional<Vertex> StructuralGraph::find(std::string_view id) const {
  if (auto it = index_.find(std::string(id)); it != index_.end()) return it->second;
  return std::nullopt;
}

Vertex StructuralGraph::vertex(std::string_view id) const {
  if (auto v = find(id)) return *v;
  throw Error(ErrorCode::kUnknownVertex, "unknown vertex '" + std::string(id) + "'",
              {{"vertex", std::string(id)}});
}

IdPair StructuralGraph::edge_ids(int e) const {
  const Edge& ed = edge(e);
  return {id(ed.u), id(ed.v)};
}

std::vector<IdPair> StructuralGraph::edge_id_list() const {
  std::vector<IdPair> out;
  out.reserve(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) out.push_back(edge_ids(static_cast<int>(e)));
  return out;
}

std::optional<int> StructuralGraph::edge_index(Vertex a, Vertex b) const {
  if (auto it = edge_lookup_.find(key(a, b)); it != edge_lookup_.end()) return it->second;
  return std::nullopt;
}

StructuralGraph build_structural_graph(std::vector<VertexId> vertices,
                                       const std::vector<IdPair>& edges) {
  return StructuralGraph(std::move(vertices), edges);
}

std::vector<FourCycle> enumerate_four_cycles(const StructuralGraph& g) {
  // Pair every two vertices at distance two with their common neighbours.
  const auto n = g.vertex_count();
  std::vector<FourCycle> cycles;
  std::vector<std::vector<Vertex>> common(n);
  std::vector<Vertex> touched;
  for (std::size_t s = 0; s < n; ++s) {
    const auto u = static_cast<Vertex>(s);
    touched.clear();
    for (Vertex x : g.neighbors(u)) {
      for (Vertex v : g.neighbors(x)) {
        if (v <= u) continue;
        auto& list = common[v];
        if (list.empty()) touched.push_back(v);
        list.push_back(x);
      }
    }
    for (Vertex v : touched) {
      auto& list = common[v];
      for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::size_t j = i + 1; j < list.size(); ++j) {
          cycles.push_back(canonical_four_cycle({u, list[i], v, list[j]}));
        }
      }
      list.clear();
    }
  }
  std::sort(cycles.begin(), cycles.end());
  cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
  return cycles;
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int x) {
  auto& p = parent_;
  while (p[x] != x) {
    p[x] = p[p[x]];
    x = p[x];
  }
  return x;
}

bool DisjointSets::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  return true;
}

}  // namespace bracerig
