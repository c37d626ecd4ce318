#include "bracerig/construct.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <set>
#include <unordered_map>

#include "bracerig/error.hpp"

namespace bracerig {
namespace {

double unit_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) { return rng() % n; }

VertexId fresh_id(const StructuralGraph& g, std::size_t& counter) {
  char buf[32];
  for (;; ++counter) {
    std::snprintf(buf, sizeof buf, "v%03zu", counter);
    if (!g.find(buf)) return buf;
  }
}

int edge_or_throw(const StructuralGraph& g, Vertex a, Vertex b) {
  if (auto e = g.edge_index(a, b)) return *e;
  throw Error(ErrorCode::kNotAnEdge, g.id(a) + "-" + g.id(b) + " is not an edge",
              {{"edge", {g.id(a), g.id(b)}}});
}

bool collinear(const Point& a, const Point& b, const Point& c, double eps) {
  const Point x = a - b;
  const Point y = c - b;
  return std::abs(cross(x, y)) <= eps * x.norm() * y.norm();
}

/// Median placed edge length. Scales new offsets so that repeated moves do
/// not shrink the drawing geometrically.
double median_edge(const StructuralGraph& g, const Placement& p) {
  std::vector<double> lengths;
  for (const Edge& e : g.edges()) lengths.push_back((p[e.u] - p[e.v]).norm());
  auto mid = lengths.begin() + static_cast<std::ptrdiff_t>(lengths.size() / 2);
  std::nth_element(lengths.begin(), mid, lengths.end());
  return *mid;
}

/// Fixed translation candidates ordered by length.
std::vector<Point> translation_candidates(double scale) {
  std::vector<Point> out;
  for (double m : {0.25, 0.5, 1.0, 1.5, 2.0, 3.0}) {
    for (int k = 0; k < 12; ++k) {
      const double angle = (10.0 + 30.0 * k) * std::numbers::pi / 180.0;
      out.emplace_back(m * scale * std::cos(angle), m * scale * std::sin(angle));
    }
  }
  return out;
}

std::optional<Vertex> collider(const Placement& p, const Point& target) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    if ((p[static_cast<Vertex>(x)] - target).norm() <= p.epsilon()) return static_cast<Vertex>(x);
  }
  return std::nullopt;
}

PFramework with_placement(const PFramework& pf, Placement p) {
  return PFramework(pf.graph(), std::move(p));
}

}  // namespace

PFramework add_four_cycle(const PFramework& pf, std::string_view u_id, std::string_view v_id,
                          std::uint64_t seed) {
  const auto& g = pf.graph();
  const auto& p = pf.placement();
  const Vertex u = g.vertex(u_id);
  const Vertex v = g.vertex(v_id);
  edge_or_throw(g, u, v);

  const double magnitude = 0.5 * median_edge(g, p);
  const Point side = p[v] - p[u];
  const double margin = std::max(p.epsilon(), 1e-3 * magnitude);
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (g.vertex_count() + 1)));

  auto clear_of_vertices = [&](const Point& q) {
    for (std::size_t x = 0; x < p.size(); ++x) {
      if ((p[static_cast<Vertex>(x)] - q).norm() <= margin) return false;
    }
    return true;
  };

  Point offset = Point::Zero();
  bool found = false;
  for (int attempt = 0; attempt < 4096 && !found; ++attempt) {
    const double angle = 2.0 * std::numbers::pi * unit_real(rng);
    const Point d(magnitude * std::cos(angle), magnitude * std::sin(angle));
    // Keep the new parallelogram visibly non-flat.
    if (std::abs(cross(side.normalized(), d.normalized())) < 0.2) continue;
    if (clear_of_vertices(p[u] + d) && clear_of_vertices(p[v] + d)) {
      offset = d;
      found = true;
    }
  }
  if (!found) {
    // Unreachable for finite inputs: only finitely many offsets are forbidden.
    throw Error(ErrorCode::kInvalidPlacement, "no admissible offset found for Add4-cycle");
  }

  std::size_t counter = g.vertex_count();
  const VertexId w1 = fresh_id(g, counter);
  ++counter;
  const VertexId w2 = fresh_id(g, counter);

  auto coords = coordinate_map(g, p);
  coords.emplace(w1, p[u] + offset);
  coords.emplace(w2, p[v] + offset);
  auto edges = g.edge_id_list();
  edges.emplace_back(g.id(u), w1);
  edges.emplace_back(w1, w2);
  edges.emplace_back(w2, g.id(v));
  return make_pframework(coords, edges, p.epsilon());
}

bool close_precondition_holds(const PFramework& pf, Vertex u, Vertex v, Vertex w,
                              Vertex* blocking) {
  const auto& g = pf.graph();
  const std::array<int, 2> excluded{edge_or_throw(g, u, v), edge_or_throw(g, v, w)};
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    const auto vx = static_cast<Vertex>(x);
    if (vx == u || vx == v || vx == w) continue;
    if (!separating_ribbon(g, pf.partition(), v, vx, excluded)) {
      if (blocking != nullptr) *blocking = vx;
      return false;
    }
  }
  return true;
}

PFramework close_four_cycle(const PFramework& pf, std::string_view u_id, std::string_view v_id,
                            std::string_view w_id, CloseMode mode) {
  const auto& g = pf.graph();
  const Vertex u = g.vertex(u_id);
  const Vertex v = g.vertex(v_id);
  const Vertex w = g.vertex(w_id);
  if (u == w) throw Error(ErrorCode::kInvalidArgument, "u and w must differ");
  const int uv = edge_or_throw(g, u, v);
  const int vw = edge_or_throw(g, v, w);
  const std::array<int, 2> excluded{uv, vw};

  auto refuse = [&](Vertex x) {
    return Error(ErrorCode::kSeparationViolated,
                 "vertex " + g.id(x) + " is separated from " + g.id(v) +
                     " only by the ribbons of " + g.id(u) + g.id(v) + " or " + g.id(v) + g.id(w),
                 {{"u", g.id(u)}, {"v", g.id(v)}, {"w", g.id(w)}, {"blocking", g.id(x)}});
  };

  if (mode == CloseMode::kCheckPrecondition) {
    Vertex blocking = -1;
    if (!close_precondition_holds(pf, u, v, w, &blocking)) throw refuse(blocking);
  }

  const auto candidates = translation_candidates(0.5 * median_edge(g, pf.placement()));
  const auto& partition = pf.partition();
  PFramework current = pf;

  // Tries translations of `ribbon` until the target point is free and u, v, w
  // are not collinear.
  auto try_ribbon = [&](int ribbon) -> std::optional<PFramework> {
    for (const Point& t : candidates) {
      Placement moved;
      try {
        moved = translate_side(current, ribbon, t);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kForbiddenTranslation) continue;
        if (e.code() == ErrorCode::kNotEdgeCut) return std::nullopt;
        throw;
      }
      const Point target = moved[u] + moved[w] - moved[v];
      if (collinear(moved[u], moved[v], moved[w], moved.epsilon())) continue;
      if (collider(moved, target)) continue;
      return with_placement(current, std::move(moved));
    }
    return std::nullopt;
  };

  for (int round = 0; round < 8; ++round) {
    const Placement& p = current.placement();
    if (collinear(p[u], p[v], p[w], p.epsilon())) {
      auto next = try_ribbon(partition.ribbon_of(uv));
      if (!next) next = try_ribbon(partition.ribbon_of(vw));
      if (!next) break;
      current = std::move(*next);
      continue;
    }
    const Point target = p[u] + p[w] - p[v];
    const auto hit = collider(p, target);
    if (!hit) {
      std::size_t counter = g.vertex_count();
      const VertexId fresh = fresh_id(g, counter);
      auto coords = coordinate_map(g, p);
      coords.emplace(fresh, target);
      auto edges = g.edge_id_list();
      edges.emplace_back(g.id(u), fresh);
      edges.emplace_back(fresh, g.id(w));
      try {
        return make_pframework(coords, edges, p.epsilon());
      } catch (const Error& e) {
        // Another common neighbour of u and w closes a second 4-cycle through
        // the new vertex, which can only be a parallelogram if it sits on v.
        if (e.code() != ErrorCode::kInvalidPlacement) throw;
        throw Error(ErrorCode::kSeparationViolated,
                    "closing " + g.id(u) + g.id(v) + g.id(w) + " creates a 4-cycle that cannot be a parallelogram",
                    {{"u", g.id(u)}, {"v", g.id(v)}, {"w", g.id(w)}, {"placement", e.details()}});
      }
    }

    std::vector<int> ribbons;
    if (mode == CloseMode::kCheckPrecondition) {
      if (auto r = separating_ribbon(g, partition, v, *hit, excluded)) ribbons.push_back(*r);
    } else {
      for (const Ribbon& r : partition.ribbons()) {
        if (r.is_edge_cut && r.separates(v, *hit)) ribbons.push_back(r.id);
      }
    }
    std::optional<PFramework> next;
    for (int r : ribbons) {
      if ((next = try_ribbon(r))) break;
    }
    if (!next) throw refuse(*hit);
    current = std::move(*next);
  }
  throw Error(ErrorCode::kSeparationViolated, "could not find an injective extension",
              {{"u", g.id(u)}, {"v", g.id(v)}, {"w", g.id(w)}});
}

// ---------------------------------------------------------------------------
// Carpets

namespace {

double polygon_area(const std::vector<Point>& poly) {
  double area = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    area += cross(poly[i], poly[(i + 1) % poly.size()]);
  }
  return 0.5 * area;
}

/// Sutherland-Hodgman clip of a convex polygon by a counter-clockwise convex one.
std::vector<Point> clip(std::vector<Point> subject, const std::array<Point, 4>& clipper) {
  for (std::size_t i = 0; i < 4 && !subject.empty(); ++i) {
    const Point& a = clipper[i];
    const Point& b = clipper[(i + 1) % 4];
    auto inside = [&](const Point& q) { return cross(Point(b - a), Point(q - a)) >= 0.0; };
    std::vector<Point> out;
    for (std::size_t j = 0; j < subject.size(); ++j) {
      const Point& cur = subject[j];
      const Point& prev = subject[(j + subject.size() - 1) % subject.size()];
      const bool cur_in = inside(cur);
      const bool prev_in = inside(prev);
      if (cur_in != prev_in) {
        const Point d = cur - prev;
        const double denom = cross(Point(b - a), d);
        const double s = cross(Point(b - a), Point(a - prev)) / denom;
        out.push_back(prev + s * d);
      }
      if (cur_in) out.push_back(cur);
    }
    subject = std::move(out);
  }
  return subject;
}

double segment_distance(const Point& q, const Point& a, const Point& b) {
  const Point d = b - a;
  const double len2 = d.squaredNorm();
  const double s = len2 > 0 ? std::clamp((q - a).dot(d) / len2, 0.0, 1.0) : 0.0;
  return (a + s * d - q).norm();
}

}  // namespace

PFramework carpet_to_framework(std::span<const Parallelogram> parallelograms, double epsilon) {
  if (parallelograms.empty()) throw Error(ErrorCode::kInvalidArgument, "carpet is empty");

  std::vector<std::array<Point, 4>> quads;
  for (std::size_t i = 0; i < parallelograms.size(); ++i) {
    auto c = parallelograms[i].corners;
    const double scale = std::max({1.0, c[0].norm(), c[1].norm(), c[2].norm(), c[3].norm()});
    if ((c[0] - c[1] + c[2] - c[3]).norm() > epsilon * scale) {
      throw Error(ErrorCode::kDegenerateParallelogram,
                  "quadrilateral " + std::to_string(i) + " is not a parallelogram", {{"index", i}});
    }
    const double area = cross(Point(c[1] - c[0]), Point(c[3] - c[0]));
    const double shortest = std::min((c[1] - c[0]).norm(), (c[3] - c[0]).norm());
    if (std::abs(area) <= epsilon * epsilon || shortest <= epsilon) {
      throw Error(ErrorCode::kDegenerateParallelogram,
                  "parallelogram " + std::to_string(i) + " is degenerate", {{"index", i}});
    }
    if (area < 0) std::swap(c[1], c[3]);
    quads.push_back(c);
  }

  // Snap corners on an epsilon grid.
  const double cell = std::max(epsilon, 1e-300);
  std::vector<Point> points;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;
  auto bucket_key = [](long long x, long long y) {
    return (static_cast<std::uint64_t>(x) * 0x9e3779b97f4a7c15ULL) ^ static_cast<std::uint64_t>(y);
  };
  auto snap = [&](const Point& q) {
    const auto cx = std::llround(q.x() / cell);
    const auto cy = std::llround(q.y() / cell);
    for (long long dx = -1; dx <= 1; ++dx) {
      for (long long dy = -1; dy <= 1; ++dy) {
        if (auto it = buckets.find(bucket_key(cx + dx, cy + dy)); it != buckets.end()) {
          for (int idx : it->second) {
            if ((points[idx] - q).norm() <= epsilon) return idx;
          }
        }
      }
    }
    points.push_back(q);
    buckets[bucket_key(cx, cy)].push_back(static_cast<int>(points.size() - 1));
    return static_cast<int>(points.size() - 1);
  };
  std::vector<std::array<int, 4>> corner_index;
  for (const auto& q : quads) corner_index.push_back({snap(q[0]), snap(q[1]), snap(q[2]), snap(q[3])});

  // Pairwise: no interior overlap, and a corner touching another
  // parallelogram's boundary must be one of its corners.
  for (std::size_t i = 0; i < quads.size(); ++i) {
    for (std::size_t j = i + 1; j < quads.size(); ++j) {
      const auto overlap = clip({quads[i].begin(), quads[i].end()}, quads[j]);
      if (overlap.size() >= 3 && std::abs(polygon_area(overlap)) > epsilon) {
        throw Error(ErrorCode::kBadIntersection,
                    "parallelograms " + std::to_string(i) + " and " + std::to_string(j) +
                        " overlap",
                    {{"pair", {i, j}}});
      }
      for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
        for (int k = 0; k < 4; ++k) {
          const int corner = corner_index[a][k];
          const auto& other = corner_index[b];
          if (std::find(other.begin(), other.end(), corner) != other.end()) continue;
          for (int s = 0; s < 4; ++s) {
            if (segment_distance(points[corner], quads[b][s], quads[b][(s + 1) % 4]) <= epsilon) {
              throw Error(ErrorCode::kBadIntersection,
                          "parallelograms " + std::to_string(i) + " and " + std::to_string(j) +
                              " meet in a partial edge",
                          {{"pair", {i, j}}});
            }
          }
        }
      }
    }
  }

  std::vector<int> order(points.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::pair(points[a].x(), points[a].y()) < std::pair(points[b].x(), points[b].y());
  });
  std::vector<VertexId> name(points.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "c%03zu", rank);
    name[order[rank]] = buf;
  }

  std::map<std::pair<int, int>, int> usage;
  for (const auto& idx : corner_index) {
    for (int k = 0; k < 4; ++k) {
      const int a = idx[k];
      const int b = idx[(k + 1) % 4];
      ++usage[{std::min(a, b), std::max(a, b)}];
    }
  }
  std::map<int, std::vector<int>> boundary;
  for (const auto& [edge, count] : usage) {
    if (count > 2) {
      throw Error(ErrorCode::kBadIntersection,
                  "edge " + name[edge.first] + "-" + name[edge.second] +
                      " is shared by more than two parallelograms");
    }
    if (count == 1) {
      boundary[edge.first].push_back(edge.second);
      boundary[edge.second].push_back(edge.first);
    }
  }
  for (const auto& [vertex, nbrs] : boundary) {
    if (nbrs.size() != 2) {
      throw Error(ErrorCode::kBoundaryNotSimple,
                  "boundary visits " + name[vertex] + " more than once", {{"vertex", name[vertex]}});
    }
  }
  {
    std::set<int> seen;
    std::vector<int> stack{boundary.begin()->first};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (!seen.insert(x).second) continue;
      for (int y : boundary[x]) stack.push_back(y);
    }
    if (seen.size() != boundary.size()) {
      throw Error(ErrorCode::kBoundaryNotSimple, "boundary consists of more than one cycle");
    }
  }

  std::map<VertexId, Point> coords;
  for (std::size_t k = 0; k < points.size(); ++k) coords.emplace(name[k], points[k]);
  std::vector<IdPair> edges;
  for (const auto& [edge, count] : usage) edges.emplace_back(name[edge.first], name[edge.second]);
  return make_pframework(coords, edges, epsilon);
}

// ---------------------------------------------------------------------------
// Generators

VertexId grid_vertex_id(int a, int b, int i, int j) {
  const int width = static_cast<int>(std::to_string(std::max(a, b)).size());
  char buf[64];
  std::snprintf(buf, sizeof buf, "v%0*d_%0*d", width, i, width, j);
  return buf;
}

PFramework generate_grid(int a, int b) {
  if (a < 1 || b < 1) throw Error(ErrorCode::kInvalidArgument, "grid dimensions must be >= 1");
  std::map<VertexId, Point> coords;
  std::vector<IdPair> edges;
  for (int i = 0; i <= a; ++i) {
    for (int j = 0; j <= b; ++j) {
      coords.emplace(grid_vertex_id(a, b, i, j), Point(i, j));
      if (i < a) edges.emplace_back(grid_vertex_id(a, b, i, j), grid_vertex_id(a, b, i + 1, j));
      if (j < b) edges.emplace_back(grid_vertex_id(a, b, i, j), grid_vertex_id(a, b, i, j + 1));
    }
  }
  return make_pframework(coords, edges);
}

PFramework generate_random_grec(int steps, std::uint64_t seed, std::size_t max_vertices) {
  if (steps < 0) throw Error(ErrorCode::kInvalidArgument, "steps must be >= 0");
  PFramework pf = make_pframework(
      {{"v000", Point(0, 0)}, {"v001", Point(1, 0)}, {"v002", Point(1, 1)}, {"v003", Point(0, 1)}},
      {{"v000", "v001"}, {"v001", "v002"}, {"v002", "v003"}, {"v003", "v000"}});
  std::mt19937_64 rng(seed);

  for (int step = 0; step < steps; ++step) {
    const auto& g = pf.graph();
    std::vector<std::array<Vertex, 3>> closable;
    if (max_vertices == 0 || g.vertex_count() + 1 <= max_vertices) {
      for (std::size_t s = 0; s < g.vertex_count(); ++s) {
        const auto v = static_cast<Vertex>(s);
        const auto nbrs = g.neighbors(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
          for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            if (close_precondition_holds(pf, nbrs[i], v, nbrs[j])) {
              closable.push_back({nbrs[i], v, nbrs[j]});
            }
          }
        }
      }
    }
    const bool can_add = max_vertices == 0 || g.vertex_count() + 2 <= max_vertices;
    const bool prefer_close = unit_real(rng) < 0.55;
    if (!closable.empty() && (prefer_close || !can_add)) {
      const auto& [u, v, w] = closable[uniform_index(rng, closable.size())];
      pf = close_four_cycle(pf, g.id(u), g.id(v), g.id(w));
    } else if (can_add) {
      const Edge e = g.edge(static_cast<int>(uniform_index(rng, g.edge_count())));
      const bool flip = (rng() & 1U) != 0;
      pf = add_four_cycle(pf, g.id(flip ? e.v : e.u), g.id(flip ? e.u : e.v), rng());
    } else {
      break;
    }
  }
  return pf;
}

}  // namespace bracerig
