#include "bracerig/rigidity.hpp"

#include <algorithm>
#include <map>

#include "bracerig/error.hpp"

namespace bracerig {
namespace {

StructuralGraph combine(const StructuralGraph& g, const std::vector<Edge>& braces) {
  auto edges = g.edge_id_list();
  for (const Edge& b : braces) edges.emplace_back(g.id(b.u), g.id(b.v));
  return StructuralGraph(g.ids(), edges);
}

nlohmann::json edge_json(const StructuralGraph& g, const Edge& e) {
  return nlohmann::json::array({g.id(e.u), g.id(e.v)});
}

}  // namespace

BracedFramework::BracedFramework(PFramework pf, const std::vector<IdPair>& braces)
    : pf_(std::move(pf)), combined_(pf_.graph()) {
  const auto& g = pf_.graph();
  for (const auto& [a, b] : braces) {
    const Vertex u = g.vertex(a);
    const Vertex v = g.vertex(b);
    const nlohmann::json where = {{"brace", {a, b}}};
    if (u == v) throw Error(ErrorCode::kNotADiagonal, "brace " + a + "-" + b + " is a loop", where);
    if (g.adjacent(u, v)) {
      throw Error(ErrorCode::kBraceIsStructuralEdge, "brace " + a + "-" + b + " is a structural edge",
                  where);
    }
    braces_.push_back(make_edge(u, v));
  }
  std::sort(braces_.begin(), braces_.end());
  if (auto dup = std::adjacent_find(braces_.begin(), braces_.end()); dup != braces_.end()) {
    throw Error(ErrorCode::kDuplicateBrace,
                "brace " + g.id(dup->u) + "-" + g.id(dup->v) + " is listed twice",
                {{"brace", edge_json(g, *dup)}});
  }

  const auto cycles = g.four_cycles();
  std::map<Edge, std::vector<int>> by_diagonal;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (const Edge& d : cycles[c].diagonals()) by_diagonal[d].push_back(static_cast<int>(c));
  }
  cycle_braced_.assign(cycles.size(), false);
  ribbon_braces_.assign(pf_.partition().size(), {});
  const auto& partition = pf_.partition();
  for (std::size_t b = 0; b < braces_.size(); ++b) {
    auto it = by_diagonal.find(braces_[b]);
    if (it == by_diagonal.end()) {
      throw Error(ErrorCode::kNotADiagonal,
                  "brace " + g.id(braces_[b].u) + "-" + g.id(braces_[b].v) +
                      " is not a diagonal of a 4-cycle",
                  {{"brace", edge_json(g, braces_[b])}});
    }
    brace_cycles_.push_back(it->second);
    std::vector<int> ribbons;
    for (int c : it->second) {
      cycle_braced_[c] = true;
      for (const Edge& e : cycles[c].edges()) ribbons.push_back(partition.ribbon_of(*g.edge_index(e.u, e.v)));
    }
    std::sort(ribbons.begin(), ribbons.end());
    ribbons.erase(std::unique(ribbons.begin(), ribbons.end()), ribbons.end());
    for (int r : ribbons) ribbon_braces_[r].push_back(static_cast<int>(b));
  }
  if (!braces_.empty()) combined_ = combine(g, braces_);
}

std::vector<IdPair> BracedFramework::brace_ids() const {
  std::vector<IdPair> out;
  for (const Edge& b : braces_) out.emplace_back(graph().id(b.u), graph().id(b.v));
  return out;
}

BracedFramework build_braced(PFramework pf, const std::vector<IdPair>& braces) {
  return BracedFramework(std::move(pf), braces);
}

BracedFramework with_added_braces(const BracedFramework& braced, const std::vector<IdPair>& extra) {
  auto braces = braced.brace_ids();
  braces.insert(braces.end(), extra.begin(), extra.end());
  return BracedFramework(braced.pframework(), braces);
}

std::vector<std::vector<int>> RibbonGraph::components() const {
  DisjointSets sets(static_cast<std::size_t>(vertex_count));
  for (const auto& e : edges) sets.unite(e.a, e.b);
  std::map<int, std::vector<int>> groups;
  for (int r = 0; r < vertex_count; ++r) groups[sets.find(r)].push_back(r);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

RibbonGraph shared_cycle_graph(const BracedFramework& braced, bool braced_only) {
  const auto& g = braced.graph();
  const auto& partition = braced.partition();
  std::map<std::pair<int, int>, std::vector<int>> links;
  const auto cycles = g.four_cycles();
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (braced_only && !braced.cycle_braced(static_cast<int>(c))) continue;
    const auto e = cycles[c].edges();
    const int r1 = partition.ribbon_of(*g.edge_index(e[0].u, e[0].v));
    const int r2 = partition.ribbon_of(*g.edge_index(e[1].u, e[1].v));
    if (r1 == r2) continue;
    links[{std::min(r1, r2), std::max(r1, r2)}].push_back(static_cast<int>(c));
  }
  RibbonGraph out;
  out.vertex_count = static_cast<int>(partition.size());
  for (auto& [key, witnesses] : links) out.edges.push_back({key.first, key.second, std::move(witnesses)});
  return out;
}

}  // namespace

RibbonGraph ribbon_graph(const BracedFramework& braced) { return shared_cycle_graph(braced, false); }
RibbonGraph bracing_graph(const BracedFramework& braced) { return shared_cycle_graph(braced, true); }

std::string_view to_string(RigidityStatus s) {
  return s == RigidityStatus::kRigid ? "Rigid" : "Flexible";
}

void require_separation(const PFramework& pf) {
  const auto& g = pf.graph();
  if (!pf.ribbon_cutting()) {
    nlohmann::json offending = nlohmann::json::array();
    std::string names;
    for (int r : pf.cutting().offending_ribbons) {
      nlohmann::json edges = nlohmann::json::array();
      for (int e : pf.partition().ribbon(r).edges) edges.push_back(edge_json(g, g.edge(e)));
      offending.push_back({{"id", r}, {"edges", edges}});
      names += (names.empty() ? "" : ", ") + std::to_string(r);
    }
    throw Error(ErrorCode::kSeparationViolated,
                "graph is not ribbon-cutting: ribbons " + names + " are not edge cuts",
                {{"reason", "not_ribbon_cutting"}, {"offending_ribbons", offending}});
  }
  const auto sep = check_separation(g, pf.partition());
  if (!sep.all_separated) {
    const auto [a, b] = *sep.unseparated;
    throw Error(ErrorCode::kSeparationViolated,
                "vertices " + g.id(a) + " and " + g.id(b) + " are not separated by a ribbon",
                {{"reason", "unseparated_pair"}, {"pair", {g.id(a), g.id(b)}}});
  }
}

Verdict rigidity_verdict(const BracedFramework& braced) {
  require_separation(braced.pframework());
  Verdict v;
  v.bracing_components = bracing_graph(braced).components();
  const auto c = v.bracing_components.size();
  v.status = c == 1 ? RigidityStatus::kRigid : RigidityStatus::kFlexible;
  if (c < 64) v.cartesian_nac_count = (std::uint64_t{1} << c) - 2;
  v.ribbon_count = static_cast<int>(braced.partition().size());
  v.min_braces_possible = v.ribbon_count - 1;
  v.unbraced = braced.unbraced();
  return v;
}

CompletionResult minimal_brace_completion(const BracedFramework& braced) {
  const auto& g = braced.graph();
  const auto components = bracing_graph(braced).components();
  std::vector<int> component_of(braced.partition().size());
  for (std::size_t k = 0; k < components.size(); ++k) {
    for (int r : components[k]) component_of[r] = static_cast<int>(k);
  }

  CompletionResult result;
  DisjointSets quotient(components.size());
  std::size_t merged = 0;
  const auto cycles = g.four_cycles();
  for (const auto& link : ribbon_graph(braced).edges) {
    if (!quotient.unite(component_of[link.a], component_of[link.b])) continue;
    Edge best{-1, -1};
    for (int c : link.witnesses) {
      for (const Edge& d : cycles[c].diagonals()) {
        if (best.u < 0 || d < best) best = d;
      }
    }
    result.added_braces.emplace_back(g.id(best.u), g.id(best.v));
    ++merged;
  }
  if (merged + 1 < components.size()) {
    result.infeasible_reason = "ribbon graph is disconnected: " +
                               std::to_string(components.size() - merged) +
                               " groups of bracing components cannot be linked";
  }
  std::sort(result.added_braces.begin(), result.added_braces.end());
  return result;
}

}  // namespace bracerig
