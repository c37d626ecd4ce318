#pragma once

// Hand transcriptions of the drawn example frameworks, shared by the unit
// tests, the acceptance binary and the fixture writer.

#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "bracerig/construct.hpp"
#include "bracerig/geometry.hpp"

namespace examples {

using bracerig::IdPair;
using bracerig::Point;

struct Example {
  std::string name;
  std::map<std::string, Point> coords;
  std::vector<IdPair> edges;
  std::vector<IdPair> braces;
};

inline Point polar(double r, double degrees) {
  const double a = degrees * std::numbers::pi / 180.0;
  return {r * std::cos(a), r * std::sin(a)};
}

/// Counter-clockwise rotation by `degrees`.
inline Point rotate(const Point& v, double degrees) {
  const double a = degrees * std::numbers::pi / 180.0;
  return {v.x() * std::cos(a) - v.y() * std::sin(a), v.x() * std::sin(a) + v.y() * std::cos(a)};
}

inline std::vector<IdPair> pairs(std::initializer_list<const char*> list) {
  std::vector<IdPair> out;
  for (const char* s : list) out.emplace_back(std::string(1, s[0]), std::string(1, s[1]));
  return out;
}

inline bracerig::PFramework framework(const Example& ex) {
  return bracerig::make_pframework(ex.coords, ex.edges);
}

/// Square with a strip of two cells on one side and a third cell hanging off
/// the strip's top; five ribbons.
inline Example five_ribbon_strip() {
  Example ex{"five_ribbon_strip", {}, {}, {}};
  auto& p = ex.coords;
  p["a"] = {0, 0};
  p["b"] = {1, 0};
  p["c"] = {1, 1};
  p["d"] = {0, 1};
  p["e"] = p["b"] + polar(0.8, 30);
  p["f"] = p["e"] + p["c"] - p["b"];
  p["g"] = p["e"] + polar(1.1, -20);
  p["h"] = p["g"] + p["f"] - p["e"];
  p["i"] = p["c"] + rotate({0, 0.9}, -10);
  p["j"] = p["f"] + p["i"] - p["c"];
  ex.edges = pairs({"ab", "bc", "cd", "da", "be", "ef", "fc", "eg", "gh", "hf", "ci", "fj", "ij"});
  return ex;
}

/// Fan of five parallelograms around the vertex b; six ribbons.
inline Example six_ribbon_fan() {
  Example ex{"six_ribbon_fan", {}, {}, {}};
  auto& p = ex.coords;
  p["a"] = {0, 0};
  p["b"] = {1, 0};
  p["c"] = p["b"] + rotate({0, 1}, 40);
  p["d"] = p["a"] + p["c"] - p["b"];
  p["e"] = p["b"] + rotate({0, 1}, -10);
  p["f"] = p["c"] + p["e"] - p["b"];
  p["g"] = p["b"] + rotate({0, 1}, -45);
  p["h"] = p["e"] + p["g"] - p["b"];
  p["i"] = p["b"] + rotate({0, 1}, -110);
  p["j"] = p["g"] + p["i"] - p["b"];
  p["k"] = p["b"] + rotate({0, 1}, -180);
  p["l"] = p["i"] + p["k"] - p["b"];
  p["m"] = p["a"] + p["k"] - p["b"];
  ex.edges = pairs({"ab", "bc", "cd", "da", "be", "ef", "fc", "bg", "gh", "he", "bi", "ij", "jg",
                    "bk", "kl", "li", "am", "mk"});
  return ex;
}

/// Square split by a center vertex into three 4-cycles sharing one ribbon.
inline Example split_square() {
  Example ex{"split_square", {}, {}, {}};
  ex.coords = {{"a", {0, 0}}, {"b", {2, 0}}, {"c", {2, 2}}, {"d", {0, 2}}, {"e", {1, 1}}};
  ex.edges = pairs({"ab", "bc", "cd", "da", "be", "ed"});
  return ex;
}

/// Ring of four parallelograms around a square hole; every ribbon cuts but
/// the vertices b and h are not separated. Placed without the closing
/// vertex, which the ring graph below adds combinatorially.
inline Example parallelogram_ring_open() {
  Example ex{"parallelogram_ring_open", {}, {}, {}};
  auto& p = ex.coords;
  p["a"] = {-0.5, 0};
  p["b"] = {1.3, 0};
  p["c"] = {1.3, 1};
  p["d"] = {-0.5, 1};
  p["e"] = p["b"] + polar(0.8, 30);
  p["f"] = p["e"] + p["c"] - p["b"];
  p["g"] = p["d"] + p["f"] - p["c"];
  p["h"] = p["a"] + p["g"] - p["d"];
  ex.edges = pairs({"ab", "bc", "cd", "da", "be", "ef", "fc", "dg", "fg", "ah", "gh"});
  return ex;
}

/// parallelogram_ring_open plus the vertex x adjacent to b and h. Its only
/// parallelogram-closing position coincides with e, so there are coordinates
/// for the graph but no parallelogram placement.
inline Example parallelogram_ring_closed() {
  Example ex = parallelogram_ring_open();
  ex.name = "parallelogram_ring_closed";
  ex.coords["x"] = ex.coords["b"] + ex.coords["h"] - ex.coords["a"];
  ex.edges.emplace_back("b", "x");
  ex.edges.emplace_back("h", "x");
  return ex;
}

inline std::string grid_id(int i, int j) { return "p" + std::to_string(i) + std::to_string(j); }

/// 4 by 3 cell grid whose middle column misses the vertical edge between
/// (2,1) and (2,2).
inline Example grid_with_missing_edge() {
  Example ex{"grid_with_missing_edge", {}, {}, {}};
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; j <= 3; ++j) {
      ex.coords[grid_id(i, j)] = Point(i, j);
      if (i < 4) ex.edges.emplace_back(grid_id(i, j), grid_id(i + 1, j));
      if (j < 3 && !(i == 2 && j == 1)) ex.edges.emplace_back(grid_id(i, j), grid_id(i, j + 1));
    }
  }
  return ex;
}

/// Square, a parallelogram on its right side and a third one closing over
/// the top; braces ac and fh.
inline Example braced_three_cells() {
  Example ex{"braced_three_cells", {}, {}, {}};
  auto& p = ex.coords;
  p["a"] = {0, 0};
  p["b"] = {1, 0};
  p["c"] = {1, 1};
  p["d"] = {0, 1};
  p["e"] = p["b"] + polar(0.8, 30);
  p["f"] = p["e"] + p["c"] - p["b"];
  p["h"] = p["a"] + p["e"] - p["b"];
  p["k"] = p["d"] + p["f"] - p["c"];
  ex.edges = pairs({"ab", "bc", "cd", "da", "be", "ef", "fc", "hk", "he", "dk", "fk"});
  ex.braces = pairs({"ac", "fh"});
  return ex;
}

/// Four ribbons, three braces connecting them all.
inline Example rigid_four_ribbons() {
  Example ex{"rigid_four_ribbons", {}, {}, {}};
  auto& p = ex.coords;
  p["a"] = {0, 0};
  p["b"] = {1, 0};
  p["c"] = {1, 1};
  p["d"] = {0, 1};
  p["e"] = p["b"] + polar(0.8, 30);
  p["f"] = p["e"] + p["c"] - p["b"];
  p["g"] = p["e"] + polar(1.1, -20);
  p["h"] = p["g"] + p["f"] - p["e"];
  p["j"] = p["b"] + p["g"] - p["e"];
  p["k"] = p["d"] + p["f"] - p["c"];
  ex.edges = pairs({"ab", "bc", "cd", "da", "be", "ef", "fc", "eg", "gh", "hf", "gj", "bj", "dk", "fk"});
  ex.braces = pairs({"ac", "bf", "ej"});
  return ex;
}

/// Six ribbons, three braces leaving three bracing components.
inline Example flexible_six_ribbons() {
  Example ex{"flexible_six_ribbons", {}, {}, {}};
  auto& p = ex.coords;
  p["a"] = {0, 0};
  p["b"] = {1, 0};
  p["c"] = {1, 1};
  p["d"] = {0, 1};
  p["e"] = p["b"] + polar(0.8, 30);
  p["f"] = p["e"] + p["c"] - p["b"];
  p["g"] = p["e"] + polar(1.1, -20);
  p["h"] = p["g"] + p["f"] - p["e"];
  p["k"] = p["d"] + p["f"] - p["c"];
  p["l"] = p["k"] + rotate({0.9, 0}, 105);
  p["m"] = p["f"] + p["l"] - p["k"];
  p["n"] = p["k"] + rotate(Point(p["m"] + Point(1.3, 0) - p["k"]), 25);
  p["o"] = p["f"] + p["n"] - p["m"];
  ex.edges = pairs({"ab", "bc", "cd", "da", "be", "ef", "fc", "eg", "gh", "hf", "dk", "fk", "kl",
                    "lm", "mf", "mn", "no", "of"});
  ex.braces = pairs({"ac", "eh", "fl"});
  return ex;
}

/// Braces of the given (column, row) cells of generate_grid(3, 3), both
/// 1-based from the lower left, each from the lower-left to the upper-right
/// corner.
inline std::vector<IdPair> grid3_cell_braces(std::initializer_list<std::pair<int, int>> cells) {
  std::vector<IdPair> out;
  for (auto [c, r] : cells) {
    out.emplace_back(bracerig::grid_vertex_id(3, 3, c - 1, r - 1), bracerig::grid_vertex_id(3, 3, c, r));
  }
  return out;
}

/// Braced cells read off the two drawn 3 by 3 grids.
inline std::vector<IdPair> grid3_rigid_braces() {
  return grid3_cell_braces({{1, 3}, {2, 3}, {3, 3}, {2, 2}, {2, 1}});
}
inline std::vector<IdPair> grid3_flexible_braces() {
  return grid3_cell_braces({{1, 1}, {3, 1}, {2, 2}, {1, 3}, {3, 3}});
}

}  // namespace examples
