#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bracerig/coloring.hpp"
#include "bracerig/geometry.hpp"

namespace bracerig {

class BracedFramework;

/// One-parameter motion rho_t(v) = anchor + R(t) red_offset(v) + blue_offset(v)
/// with R(t) = clockwise_rotation(t). red_offset sums blue edge vectors and
/// blue_offset red edge vectors along walks from the base vertex, so both are
/// relative to anchor = rho(base vertex).
struct Flex {
  Vertex base_vertex = 0;
  Point anchor = Point::Zero();
  std::vector<VertexId> ids;
  std::vector<Edge> edges;  ///< structural edges and braces
  std::vector<Point> red_offset;
  std::vector<Point> blue_offset;
  std::vector<Color> edge_colors;  ///< parallel to edges
  double epsilon = kDefaultEpsilon;
};

/// coloring is over braced.combined_graph(). Throws kNotCartesian, or
/// kOffsetInconsistent if two walks give different offsets.
Flex build_flex(const BracedFramework& braced, const EdgeColoring& coloring);

Placement sample_flex(const Flex& flex, double t);

template <typename Scalar>
std::vector<Point2<Scalar>> sample_flex_as(const Flex& flex, Scalar t) {
  const auto rotation = clockwise_rotation<Scalar>(t);
  std::vector<Point2<Scalar>> out;
  out.reserve(flex.ids.size());
  for (std::size_t v = 0; v < flex.ids.size(); ++v) {
    out.push_back(flex.anchor.cast<Scalar>() + rotation * flex.red_offset[v].cast<Scalar>() +
                  flex.blue_offset[v].cast<Scalar>());
  }
  return out;
}

struct FlexReport {
  double max_length_drift = 0.0;
  double max_pair_variation = 0.0;  ///< largest change of a non-edge distance
  std::vector<double> degenerate_ts;
  bool nontrivial = false;
  std::vector<double> sampled_ts;
};

/// Samples t uniformly in [0, 2 pi) from a generator seeded with seed.
/// Throws kInvalidArgument if sample_count < 2 and kLengthDriftExceeded if an
/// edge length moves by more than tol.
FlexReport verify_flex(const Flex& flex, int sample_count, double tol = 1e-9, std::uint64_t seed = 0);

enum class AnimationFormat { kJson, kSvg };
/// "json" or "svg"; throws kUnsupportedFormat.
AnimationFormat parse_animation_format(std::string_view name);

/// Frames at t0 + k (t1 - t0) / (frames - 1). Throws kInvalidArgument for
/// frames < 2.
std::vector<double> animation_times(int frames, double t0, double t1);

std::string export_animation(const Flex& flex, int frames, double t0, double t1, AnimationFormat format);

}  // namespace bracerig
