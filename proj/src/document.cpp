#include "bracerig/document.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "bracerig/error.hpp"
#include "bracerig/format.hpp"

namespace bracerig {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kSchemaError, path + ": " + what, {{"path", path}});
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, "missing required key \"" + key + "\"");
  return *it;
}

double finite_number(const json& j, const std::string& path) {
  if (!j.is_number()) schema_error(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) schema_error(path, "coordinate is not finite");
  return x;
}

void only_keys(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      schema_error(path, "unknown key \"" + key + "\"");
    }
  }
}

std::vector<IdPair> pair_list(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of [id, id] pairs");
  std::vector<IdPair> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string at = path + "[" + std::to_string(k) + "]";
    const json& p = j[k];
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      schema_error(at, "expected [id, id]");
    }
    out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kMalformedJson, std::string("malformed JSON: ") + e.what(),
                {{"byte", e.byte}});
  }
}

IdPair ordered(IdPair p) {
  if (p.second < p.first) std::swap(p.first, p.second);
  return p;
}

}  // namespace

FrameworkDocument document_from_json(const json& j) {
  if (!j.is_object()) schema_error("$", "expected an object");
  only_keys(j, {"schema_version", "vertices", "edges", "braces", "metadata"}, "$");
  FrameworkDocument doc;

  const json& version = field(j, "schema_version", "$");
  if (!version.is_number_integer() || version.get<long long>() != kSchemaVersion) {
    schema_error("$.schema_version", "expected " + std::to_string(kSchemaVersion));
  }

  const json& vertices = field(j, "vertices", "$");
  if (!vertices.is_array()) schema_error("$.vertices", "expected an array");
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const std::string at = "$.vertices[" + std::to_string(k) + "]";
    const json& v = vertices[k];
    if (!v.is_object()) schema_error(at, "expected an object");
    only_keys(v, {"id", "x", "y"}, at);
    const json& id = field(v, "id", at);
    if (!id.is_string() || id.get<std::string>().empty()) schema_error(at + ".id", "expected a non-empty string");
    doc.vertices.push_back({id.get<std::string>(), finite_number(field(v, "x", at), at + ".x"),
                            finite_number(field(v, "y", at), at + ".y")});
  }

  doc.edges = pair_list(field(j, "edges", "$"), "$.edges");
  if (auto it = j.find("braces"); it != j.end()) doc.braces = pair_list(*it, "$.braces");

  if (auto it = j.find("metadata"); it != j.end()) {
    if (!it->is_object()) schema_error("$.metadata", "expected an object");
    only_keys(*it, {"name", "seed"}, "$.metadata");
    if (auto name = it->find("name"); name != it->end()) {
      if (!name->is_string()) schema_error("$.metadata.name", "expected a string");
      doc.name = name->get<std::string>();
    }
    if (auto seed = it->find("seed"); seed != it->end()) {
      if (!seed->is_number_unsigned() && !(seed->is_number_integer() && seed->get<long long>() >= 0)) {
        schema_error("$.metadata.seed", "expected a non-negative integer");
      }
      doc.seed = seed->get<std::uint64_t>();
    }
  }
  return doc;
}

FrameworkDocument parse_document(std::string_view text) { return document_from_json(parse_json(text)); }

BracedFramework to_braced(const FrameworkDocument& doc) {
  try {
    std::vector<VertexId> ids;
    for (const auto& v : doc.vertices) ids.push_back(v.id);
    StructuralGraph g(ids, doc.edges);
    std::map<VertexId, Point> coords;
    for (const auto& v : doc.vertices) coords.emplace(v.id, Point(v.x, v.y));
    Placement p = Placement::from_map(g, coords, default_epsilon());
    return BracedFramework(PFramework(std::move(g), std::move(p)), doc.braces);
  } catch (const Error& e) {
    Error wrapped(ErrorCode::kValidationError, e.what(), e.details());
    wrapped.with_cause(e.code());
    throw wrapped;
  }
}

BracedFramework parse_framework(std::string_view text) { return to_braced(parse_document(text)); }

FrameworkDocument document_from_pframework(const PFramework& pf, std::optional<std::string> name,
                                           std::optional<std::uint64_t> seed) {
  FrameworkDocument doc;
  const auto& g = pf.graph();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Point& q = pf.placement()[static_cast<Vertex>(v)];
    doc.vertices.push_back({g.id(static_cast<Vertex>(v)), canonical_number(q.x()), canonical_number(q.y())});
  }
  doc.edges = g.edge_id_list();
  doc.name = std::move(name);
  doc.seed = seed;
  return doc;
}

FrameworkDocument document_from_braced(const BracedFramework& braced, std::optional<std::string> name,
                                       std::optional<std::uint64_t> seed) {
  auto doc = document_from_pframework(braced.pframework(), std::move(name), seed);
  doc.braces = braced.brace_ids();
  return doc;
}

json document_to_json(const FrameworkDocument& doc) {
  auto vertices = doc.vertices;
  std::sort(vertices.begin(), vertices.end(),
            [](const DocumentVertex& a, const DocumentVertex& b) { return a.id < b.id; });
  auto canonical_pairs = [](std::vector<IdPair> pairs) {
    for (auto& p : pairs) p = ordered(p);
    std::sort(pairs.begin(), pairs.end());
    json out = json::array();
    for (const auto& [a, b] : pairs) out.push_back({a, b});
    return out;
  };
  json j;
  j["schema_version"] = doc.schema_version;
  j["vertices"] = json::array();
  for (const auto& v : vertices) {
    j["vertices"].push_back({{"id", v.id}, {"x", canonical_number(v.x)}, {"y", canonical_number(v.y)}});
  }
  j["edges"] = canonical_pairs(doc.edges);
  j["braces"] = canonical_pairs(doc.braces);
  if (doc.name || doc.seed) {
    json meta = json::object();
    if (doc.name) meta["name"] = *doc.name;
    if (doc.seed) meta["seed"] = *doc.seed;
    j["metadata"] = meta;
  }
  return j;
}

std::string serialize_document(const FrameworkDocument& doc) { return document_to_json(doc).dump(2) + "\n"; }

std::string serialize_framework(const BracedFramework& braced) {
  return serialize_document(document_from_braced(braced));
}

std::vector<Parallelogram> carpet_from_json(const json& j) {
  if (!j.is_array() || j.empty()) schema_error("$", "expected a non-empty array of parallelograms");
  std::vector<Parallelogram> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string at = "$[" + std::to_string(k) + "]";
    if (!j[k].is_array() || j[k].size() != 4) schema_error(at, "expected four corners");
    Parallelogram p;
    for (std::size_t c = 0; c < 4; ++c) {
      const std::string cat = at + "[" + std::to_string(c) + "]";
      const json& corner = j[k][c];
      if (!corner.is_array() || corner.size() != 2) schema_error(cat, "expected [x, y]");
      p.corners[c] = Point(finite_number(corner[0], cat + "[0]"), finite_number(corner[1], cat + "[1]"));
    }
    out.push_back(p);
  }
  return out;
}

std::vector<Parallelogram> parse_carpet(std::string_view text) { return carpet_from_json(parse_json(text)); }

// ---------------------------------------------------------------------------
// Reports

json edge_pair_json(const StructuralGraph& g, const Edge& e) { return json::array({g.id(e.u), g.id(e.v)}); }

namespace {

json vertex_list(const StructuralGraph& g, const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(g.id(v));
  return out;
}

}  // namespace

json ribbons_report(const PFramework& pf) {
  const auto& g = pf.graph();
  json ribbons = json::array();
  for (const Ribbon& r : pf.partition().ribbons()) {
    json edges = json::array();
    for (int e : r.edges) edges.push_back(edge_pair_json(g, g.edge(e)));
    json components = json::array();
    for (const auto& c : r.components) components.push_back(vertex_list(g, c));
    ribbons.push_back({{"id", r.id},
                       {"size", r.edges.size()},
                       {"simple", r.is_simple},
                       {"edge_cut", r.is_edge_cut},
                       {"edges", edges},
                       {"components", components}});
  }
  return {{"ribbon_count", pf.partition().size()},
          {"ribbon_cutting", pf.ribbon_cutting()},
          {"offending_ribbons", pf.cutting().offending_ribbons},
          {"ribbons", ribbons}};
}

json verdict_json(const Verdict& v) {
  json out = {{"status", std::string(to_string(v.status))},
              {"bracing_components", v.bracing_components},
              {"bracing_component_count", v.bracing_components.size()},
              {"ribbon_count", v.ribbon_count},
              {"min_braces_possible", v.min_braces_possible},
              {"unbraced", v.unbraced}};
  out["cartesian_nac_count"] = v.cartesian_nac_count ? json(*v.cartesian_nac_count) : json(nullptr);
  return out;
}

json ribbon_graph_json(const StructuralGraph& g, const RibbonGraph& rg) {
  json edges = json::array();
  for (const auto& e : rg.edges) {
    json witnesses = json::array();
    for (int c : e.witnesses) {
      json cycle = json::array();
      for (Vertex v : g.four_cycles()[c].vertices) cycle.push_back(g.id(v));
      witnesses.push_back(cycle);
    }
    edges.push_back({{"a", e.a}, {"b", e.b}, {"witnesses", witnesses}});
  }
  return {{"vertex_count", rg.vertex_count}, {"edges", edges}};
}

json completion_json(const CompletionResult& c) {
  json added = json::array();
  for (const auto& [a, b] : c.added_braces) added.push_back({a, b});
  json out = {{"added_braces", added}, {"feasible", c.feasible()}};
  out["infeasible_reason"] = c.infeasible_reason ? json(*c.infeasible_reason) : json(nullptr);
  return out;
}

json coloring_json(const StructuralGraph& g, const EdgeColoring& coloring) {
  json out = json::array();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.edge_ids(static_cast<int>(e));
    out.push_back({a, b, std::string(to_string(coloring.color(static_cast<int>(e))))});
  }
  return out;
}

json analyze_report(const BracedFramework& braced) {
  const Verdict verdict = rigidity_verdict(braced);
  const auto& g = braced.graph();
  json ribbon_of = json::array();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    ribbon_of.push_back({{"edge", edge_pair_json(g, g.edge(static_cast<int>(e)))},
                         {"ribbon", braced.partition().ribbon_of(static_cast<int>(e))}});
  }
  json out;
  out["verdict"] = verdict_json(verdict);
  out["ribbons"] = ribbon_of;
  out["ribbon_graph"] = ribbon_graph_json(g, ribbon_graph(braced));
  out["bracing_graph"] = ribbon_graph_json(g, bracing_graph(braced));
  out["cartesian_nac_count"] = out["verdict"]["cartesian_nac_count"];
  out["min_braces_possible"] = verdict.min_braces_possible;
  out["completion_suggestion"] = completion_json(minimal_brace_completion(braced));
  return out;
}

std::string analyze_text(const BracedFramework& braced) {
  const Verdict v = rigidity_verdict(braced);
  std::string out;
  out += "status: " + std::string(to_string(v.status)) + "\n";
  out += "ribbons: " + std::to_string(v.ribbon_count) + "\n";
  out += "bracing components: " + std::to_string(v.bracing_components.size()) + "\n";
  for (const auto& c : v.bracing_components) {
    out += "  {";
    for (std::size_t k = 0; k < c.size(); ++k) out += (k ? ", " : "") + std::to_string(c[k]);
    out += "}\n";
  }
  out += "cartesian NAC-colorings: " +
         (v.cartesian_nac_count ? std::to_string(*v.cartesian_nac_count) : std::string("more than 2^63")) + "\n";
  out += "minimum braces for rigidity: " + std::to_string(v.min_braces_possible) + "\n";
  if (v.unbraced) out += "unbraced: yes\n";
  return out;
}

std::string ribbons_text(const PFramework& pf) {
  std::string out = "id  size  simple  cut\n";
  for (const Ribbon& r : pf.partition().ribbons()) {
    char line[96];
    std::snprintf(line, sizeof line, "%-3d %-5zu %-7s %s\n", r.id, r.edges.size(), r.is_simple ? "yes" : "no",
                  r.is_edge_cut ? "yes" : "no");
    out += line;
  }
  out += pf.ribbon_cutting() ? "ribbon-cutting: yes\n" : "ribbon-cutting: no\n";
  return out;
}

}  // namespace bracerig
