#include "bracerig/flex.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <random>

#include <json.hpp>

#include "bracerig/error.hpp"
#include "bracerig/format.hpp"
#include "bracerig/rigidity.hpp"

namespace bracerig {

Flex build_flex(const BracedFramework& braced, const EdgeColoring& coloring) {
  const auto& g = braced.combined_graph();
  const auto& p = braced.placement();
  const auto status = check_cartesian(g, coloring);
  if (!status.is_cartesian) {
    throw Error(ErrorCode::kNotCartesian, "flex needs a cartesian NAC-coloring",
                {{"surjective", status.surjective}, {"is_nac", status.is_nac}});
  }

  Flex flex;
  flex.base_vertex = 0;
  flex.anchor = p[0];
  flex.ids = g.ids();
  flex.edges.assign(g.edges().begin(), g.edges().end());
  flex.edge_colors = coloring.colors();
  flex.epsilon = p.epsilon();

  const auto n = g.vertex_count();
  flex.red_offset.assign(n, Point::Zero());
  flex.blue_offset.assign(n, Point::Zero());
  std::vector<int> tree_edge(n, -1);
  std::vector<bool> seen(n, false);
  std::deque<Vertex> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (seen[y]) continue;
      seen[y] = true;
      const int e = *g.edge_index(x, y);
      tree_edge[y] = e;
      const Point step = p[y] - p[x];
      flex.red_offset[y] = flex.red_offset[x];
      flex.blue_offset[y] = flex.blue_offset[x];
      (coloring.color(e) == Color::kRed ? flex.blue_offset[y] : flex.red_offset[y]) += step;
      queue.push_back(y);
    }
  }

  // Every non-tree edge closes a second walk; both walks must agree.
  double extent = 1.0;
  for (std::size_t v = 0; v < n; ++v) extent = std::max(extent, (p[static_cast<Vertex>(v)] - flex.anchor).norm());
  const double tol = std::max(p.epsilon(), 1e-12) * extent;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(static_cast<int>(e));
    if (tree_edge[edge.u] == static_cast<int>(e) || tree_edge[edge.v] == static_cast<int>(e)) continue;
    const Point step = p[edge.v] - p[edge.u];
    const bool red = coloring.color(static_cast<int>(e)) == Color::kRed;
    const Point expect_red = red ? Point::Zero() : step;
    const Point expect_blue = red ? step : Point::Zero();
    const double drift = std::max(
        (flex.red_offset[edge.v] - flex.red_offset[edge.u] - expect_red).norm(),
        (flex.blue_offset[edge.v] - flex.blue_offset[edge.u] - expect_blue).norm());
    if (drift > tol) {
      throw Error(ErrorCode::kOffsetInconsistent,
                  "offsets disagree across edge " + g.id(edge.u) + "-" + g.id(edge.v),
                  {{"edge", {g.id(edge.u), g.id(edge.v)}}, {"drift", drift}});
    }
  }
  return flex;
}

Placement sample_flex(const Flex& flex, double t) {
  return Placement(sample_flex_as<double>(flex, t), flex.epsilon);
}

FlexReport verify_flex(const Flex& flex, int sample_count, double tol, std::uint64_t seed) {
  if (sample_count < 2) throw Error(ErrorCode::kInvalidArgument, "sample_count must be at least 2");
  const auto n = flex.ids.size();
  const auto base = sample_flex_as<double>(flex, 0.0);

  std::vector<std::vector<bool>> is_edge(n, std::vector<bool>(n, false));
  for (const Edge& e : flex.edges) is_edge[e.u][e.v] = is_edge[e.v][e.u] = true;

  FlexReport report;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);
  for (int s = 0; s < sample_count; ++s) {
    const double t = uniform(rng);
    report.sampled_ts.push_back(t);
    const auto q = sample_flex_as<double>(flex, t);
    bool degenerate = false;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        const double now = (q[a] - q[b]).norm();
        const double before = (base[a] - base[b]).norm();
        const double change = std::abs(now - before);
        if (is_edge[a][b]) {
          report.max_length_drift = std::max(report.max_length_drift, change);
        } else {
          report.max_pair_variation = std::max(report.max_pair_variation, change);
        }
        if (now <= tol) degenerate = true;
      }
    }
    if (degenerate) report.degenerate_ts.push_back(t);
  }
  report.nontrivial = report.max_pair_variation > tol;
  if (report.max_length_drift > tol) {
    throw Error(ErrorCode::kLengthDriftExceeded,
                "edge length drift " + format_number(report.max_length_drift) + " exceeds " +
                    format_number(tol),
                {{"max_length_drift", report.max_length_drift}, {"tol", tol}});
  }
  return report;
}

AnimationFormat parse_animation_format(std::string_view name) {
  if (name == "json") return AnimationFormat::kJson;
  if (name == "svg") return AnimationFormat::kSvg;
  throw Error(ErrorCode::kUnsupportedFormat, "unsupported animation format: " + std::string(name),
              {{"format", std::string(name)}});
}

std::vector<double> animation_times(int frames, double t0, double t1) {
  if (frames < 2) throw Error(ErrorCode::kInvalidArgument, "frames must be at least 2");
  std::vector<double> ts;
  for (int k = 0; k < frames; ++k) ts.push_back(t0 + (t1 - t0) * k / (frames - 1));
  return ts;
}

namespace {

std::string svg_document(const Flex& flex, const std::vector<double>& ts) {
  std::vector<std::vector<Point>> frames;
  double lo_x = 0, lo_y = 0, hi_x = 0, hi_y = 0;
  bool first = true;
  for (double t : ts) {
    frames.push_back(sample_flex_as<double>(flex, t));
    for (const Point& q : frames.back()) {
      const double x = canonical_number(q.x());
      const double y = canonical_number(q.y());
      lo_x = first ? x : std::min(lo_x, x);
      hi_x = first ? x : std::max(hi_x, x);
      lo_y = first ? y : std::min(lo_y, y);
      hi_y = first ? y : std::max(hi_y, y);
      first = false;
    }
  }
  const double pad = 0.1 * std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
  const double width = hi_x - lo_x + 2 * pad;
  const double height = hi_y - lo_y + 2 * pad;
  const double radius = 0.02 * std::max(width, height);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
         format_number(lo_x - pad) + " " + format_number(-hi_y - pad) + " " + format_number(width) + " " +
         format_number(height) + "\">\n";
  const std::string duration = format_number(0.1 * static_cast<double>(ts.size())) + "s";
  for (std::size_t k = 0; k < frames.size(); ++k) {
    const auto& q = frames[k];
    out += "<g class=\"frame\" data-t=\"" + format_number(ts[k]) + "\" transform=\"scale(1,-1)\"" +
           (k == 0 ? "" : " display=\"none\"") + ">\n";
    std::string key_times = "0";
    std::string values = k == 0 ? "inline" : "none";
    if (k > 0) {
      key_times += ";" + format_number(static_cast<double>(k) / static_cast<double>(ts.size()));
      values += ";inline";
    }
    if (k + 1 < ts.size()) {
      key_times += ";" + format_number(static_cast<double>(k + 1) / static_cast<double>(ts.size()));
      values += ";none";
    }
    out += "<animate attributeName=\"display\" calcMode=\"discrete\" dur=\"" + duration +
           "\" repeatCount=\"indefinite\" keyTimes=\"" + key_times + "\" values=\"" + values + "\"/>\n";
    for (std::size_t e = 0; e < flex.edges.size(); ++e) {
      const Edge& edge = flex.edges[e];
      out += "<line x1=\"" + format_number(q[edge.u].x()) + "\" y1=\"" + format_number(q[edge.u].y()) +
             "\" x2=\"" + format_number(q[edge.v].x()) + "\" y2=\"" + format_number(q[edge.v].y()) +
             "\" stroke=\"" + (flex.edge_colors[e] == Color::kRed ? "#c0392b" : "#2c6fbb") +
             "\" stroke-width=\"" + format_number(radius / 2) + "\"/>\n";
    }
    for (std::size_t v = 0; v < q.size(); ++v) {
      out += "<circle data-id=\"" + flex.ids[v] + "\" cx=\"" + format_number(q[v].x()) + "\" cy=\"" +
             format_number(q[v].y()) + "\" r=\"" + format_number(radius) + "\"/>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace

std::string export_animation(const Flex& flex, int frames, double t0, double t1, AnimationFormat format) {
  const auto ts = animation_times(frames, t0, t1);
  if (format == AnimationFormat::kSvg) return svg_document(flex, ts);

  nlohmann::json doc;
  doc["t_values"] = nlohmann::json::array();
  doc["frames"] = nlohmann::json::array();
  for (double t : ts) {
    doc["t_values"].push_back(canonical_number(t));
    const auto q = sample_flex_as<double>(flex, t);
    nlohmann::json frame = nlohmann::json::object();
    for (std::size_t v = 0; v < q.size(); ++v) {
      frame[flex.ids[v]] = {canonical_number(q[v].x()), canonical_number(q[v].y())};
    }
    doc["frames"].push_back(std::move(frame));
  }
  return doc.dump() + "\n";
}

}  // namespace bracerig
