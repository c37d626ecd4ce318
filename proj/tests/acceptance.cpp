// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bracerig/coloring.hpp"
#include "bracerig/construct.hpp"
#include "bracerig/error.hpp"
#include "bracerig/flex.hpp"
#include "bracerig/rigidity.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace bracerig;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "failed: " + what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string str(std::size_t n) { return std::to_string(n); }

int failures = 0;

void criterion(int number, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.note(std::string("unexpected exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= limit_seconds) {
    out.pass = false;
    out.note("runtime over " + std::to_string(limit_seconds) + " s");
  }
  if (!out.pass) ++failures;
  std::printf("criterion %d %s: %s (%.3f s) %s\n", number, title, out.pass ? "PASS" : "FAIL", seconds,
              out.detail.c_str());
  std::fflush(stdout);
}

StructuralGraph graph_of(const examples::Example& ex) {
  std::vector<VertexId> ids;
  for (const auto& [id, p] : ex.coords) ids.push_back(id);
  return build_structural_graph(ids, ex.edges);
}

std::size_t edge_cut_count(const RibbonPartition& p, bool cut) {
  std::size_t n = 0;
  for (const auto& r : p.ribbons()) n += r.is_edge_cut == cut ? 1 : 0;
  return n;
}

bool refused(const BracedFramework& braced) {
  try {
    rigidity_verdict(braced);
  } catch (const Error& e) {
    return e.code() == ErrorCode::kSeparationViolated;
  }
  return false;
}

// Identifies a placed graph so that braced copies are scanned once.
std::string placement_key(const PFramework& pf) {
  std::string key;
  for (const auto& [a, b] : pf.graph().edge_id_list()) key += a + "-" + b + ";";
  for (const auto& p : pf.placement().coords()) key += std::to_string(p.x()) + "," + std::to_string(p.y()) + ";";
  return key;
}

// Every brace configuration of a grid: each cell unbraced or braced on one of
// its two diagonals.
std::vector<BracedFramework> all_bracings(const PFramework& pf) {
  const auto& g = pf.graph();
  const auto cycles = g.four_cycles();
  std::vector<BracedFramework> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < cycles.size(); ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<IdPair> braces;
    std::size_t rest = code;
    for (const auto& c : cycles) {
      const auto choice = rest % 3;
      rest /= 3;
      if (choice == 0) continue;
      const auto d = c.diagonals()[choice - 1];
      braces.emplace_back(g.id(d.u), g.id(d.v));
    }
    out.emplace_back(pf, braces);
  }
  return out;
}

std::uint64_t expected_count(const BracedFramework& b) {
  const auto c = rigidity_verdict(b).bracing_components.size();
  return (std::uint64_t{1} << c) - 2;
}

}  // namespace

int main() {
  criterion(1, "drawn examples", 1.0, [](Outcome& out) {
    const auto strip = examples::framework(examples::five_ribbon_strip());
    out.expect(strip.partition().size() == 5, "five-ribbon strip has " + str(strip.partition().size()) + " ribbons");
    const auto fan = examples::framework(examples::six_ribbon_fan());
    out.expect(fan.partition().size() == 6, "six-ribbon fan has " + str(fan.partition().size()) + " ribbons");

    const auto split = graph_of(examples::split_square());
    const auto split_ribbons = compute_ribbons(split);
    std::size_t non_simple = 0;
    for (const auto& r : split_ribbons.ribbons()) non_simple += r.is_simple ? 0 : 1;
    out.expect(non_simple == 1, "split square has " + str(non_simple) + " non-simple ribbons");

    const auto ring = graph_of(examples::parallelogram_ring_closed());
    const auto ring_ribbons = compute_ribbons(ring);
    out.expect(classify_ribbon_cutting(ring, ring_ribbons).ribbon_cutting, "closed ring is not ribbon-cutting");
    out.expect(!check_separation(ring, ring_ribbons).all_separated, "closed ring passes the separation check");

    const auto gap = examples::framework(examples::grid_with_missing_edge());
    const auto non_cut = edge_cut_count(gap.partition(), false);
    out.note("grid with a missing edge: " + str(non_cut) + " non-cut ribbons");
    out.expect(non_cut == 2, "grid with a missing edge has " + str(non_cut) + " non-cut ribbons, expected 2");
    out.expect(refused(BracedFramework(gap, {})), "grid with a missing edge is not refused");

    const auto top = corpus::braced_example(examples::rigid_four_ribbons());
    const auto top_bracing = bracing_graph(top);
    out.expect(top_bracing.components().size() == 1, "four-ribbon bracing graph is disconnected");
    out.expect(rigidity_verdict(top).status == RigidityStatus::kRigid, "four-ribbon example is not Rigid");

    const auto bottom = corpus::braced_example(examples::flexible_six_ribbons());
    const auto bottom_components = bracing_graph(bottom).components().size();
    out.expect(bottom_components == 3, "six-ribbon example has " + str(bottom_components) + " bracing components");
    out.expect(rigidity_verdict(bottom).status == RigidityStatus::kFlexible, "six-ribbon example is not Flexible");
  });

  criterion(2, "3x3 grid bracings", 1.0, [](Outcome& out) {
    const auto grid = generate_grid(3, 3);
    const BracedFramework left(grid, examples::grid3_rigid_braces());
    const BracedFramework right(grid, examples::grid3_flexible_braces());
    out.expect(rigidity_verdict(left).status == RigidityStatus::kRigid, "left bracing is not Rigid");
    out.expect(rigidity_verdict(right).status == RigidityStatus::kFlexible, "right bracing is not Flexible");
    const auto completion = minimal_brace_completion(right);
    out.expect(completion.added_braces.size() == 1,
               "completion adds " + str(completion.added_braces.size()) + " braces");
    out.expect(rigidity_verdict(with_added_braces(right, completion.added_braces)).status == RigidityStatus::kRigid,
               "completed right bracing is not Rigid");
  });

  criterion(3, "connectivity equals no cartesian NAC-coloring", 30.0, [](Outcome& out) {
    std::mt19937_64 rng(20240601);
    const double probabilities[] = {0.2, 0.5, 0.8, 1.0};
    std::size_t instances = 0, rigid = 0, flexible = 0, brute_checked = 0, flexes = 0;
    double worst_drift = 0.0;
    for (std::uint64_t seed = 1; instances < 240; ++seed) {
      const int steps = 4 + static_cast<int>(rng() % 60);
      const auto pf = generate_random_grec(steps, seed, 40);
      const double p = probabilities[seed % 4];
      const BracedFramework braced(pf, corpus::random_braces(pf, p, rng));
      ++instances;
      const bool connected = bracing_graph(braced).components().size() == 1;
      const auto nacs = enumerate_cartesian_nac(braced);
      if (connected != nacs.empty()) {
        out.expect(false, "seed " + std::to_string(seed) + " disagrees");
        continue;
      }
      if (braced.combined_graph().edge_count() <= 16) {
        ++brute_checked;
        const bool oracle_empty = brute_force_nac_oracle(braced.combined_graph(), true).empty();
        out.expect(oracle_empty == connected, "brute force disagrees on seed " + std::to_string(seed));
      }
      if (connected) {
        ++rigid;
        continue;
      }
      ++flexible;
      std::set<std::uint64_t> picks{0, nacs.size() - 1, rng() % nacs.size()};
      for (auto index : picks) {
        const auto coloring = nacs.at(index);
        out.expect(check_cartesian(braced.combined_graph(), coloring).is_cartesian,
                   "enumerated coloring is not cartesian on seed " + std::to_string(seed));
        const auto flex = build_flex(braced, coloring);
        const auto report = verify_flex(flex, 100, 1e-9, seed);
        ++flexes;
        worst_drift = std::max(worst_drift, report.max_length_drift);
        out.expect(report.nontrivial, "trivial flex on seed " + std::to_string(seed));
        out.expect(report.max_length_drift <= 1e-9, "drift on seed " + std::to_string(seed));
      }
    }
    out.expect(rigid > 0 && flexible > 0, "corpus lacks rigid or flexible instances");
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu instances, %zu rigid, %zu flexible, %zu brute-force checked, %zu flexes, max drift %.2e",
                  instances, rigid, flexible, brute_checked, flexes, worst_drift);
    out.note(buf);
  });

  criterion(4, "enumeration equals the brute-force oracle", 30.0, [](Outcome& out) {
    std::vector<corpus::Entry> small;
    for (auto& e : corpus::instances()) {
      if (e.braced.graph().edge_count() <= 12) small.push_back(std::move(e));
    }
    small.push_back({"five_ribbon_strip", corpus::braced_example(examples::five_ribbon_strip())});
    for (auto& b : all_bracings(generate_grid(1, 1))) small.push_back({"c4_bracing", std::move(b)});
    for (auto& b : all_bracings(generate_grid(2, 1))) small.push_back({"grid_2x1_bracing", std::move(b)});
    for (auto& b : all_bracings(generate_grid(2, 2))) small.push_back({"grid_2x2_bracing", std::move(b)});

    for (const auto& entry : small) {
      const auto e = enumerate_cartesian_nac(entry.braced);
      const auto listed = e.all();
      const std::set<EdgeColoring> got(listed.begin(), listed.end());
      const auto oracle_list = brute_force_nac_oracle(entry.braced.combined_graph(), true);
      const std::set<EdgeColoring> want(oracle_list.begin(), oracle_list.end());
      out.expect(got == want && got.size() == listed.size(), entry.name + " differs from the oracle");
      out.expect(e.size() == expected_count(entry.braced), entry.name + " count is not 2^c - 2");
    }
    const auto c4 = generate_grid(1, 1).graph();
    const auto nac = brute_force_nac_oracle(c4, false).size();
    const auto cart = brute_force_nac_oracle(c4, true).size();
    out.expect(nac == 6 && cart == 2, "C4 has " + str(nac) + " NAC and " + str(cart) + " cartesian colorings");
    out.note(str(small.size()) + " instances");
  });

  criterion(5, "minimum brace count on grids", 1.0, [](Outcome& out) {
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b) {
        const BracedFramework grid(generate_grid(a, b), {});
        const auto c = minimal_brace_completion(grid);
        const std::string name = std::to_string(a) + "x" + std::to_string(b);
        out.expect(c.added_braces.size() == static_cast<std::size_t>(a + b - 1),
                   name + " needs " + str(c.added_braces.size()) + " braces");
        out.expect(rigidity_verdict(with_added_braces(grid, c.added_braces)).status == RigidityStatus::kRigid,
                   name + " completion is not Rigid");
      }
  });

  criterion(6, "structural lemmas", 30.0, [](Outcome& out) {
    std::mt19937_64 rng(61);
    std::size_t walks = 0, embeddings = 0;
    for (const auto& entry : corpus::instances()) {
      const auto& pf = entry.braced.pframework();
      const auto& g = pf.graph();
      const auto& part = pf.partition();
      const auto og = oracle::from(g);

      for (const auto& r : part.ribbons()) {
        if (!r.is_simple || !r.is_edge_cut) continue;
        const std::set<int> members(r.edges.begin(), r.edges.end());
        const auto label = oracle::components(og, [&](int e) { return members.count(e) == 0; });
        out.expect(oracle::component_count(label) == 2, entry.name + " cut ribbon without two components");
      }

      for (int trial = 0; trial < 30; ++trial) {
        std::vector<Vertex> walk{static_cast<Vertex>(rng() % g.vertex_count())};
        const int length = 2 + static_cast<int>(rng() % 16);
        for (int s = 0; s < length; ++s) {
          const auto nbrs = g.neighbors(walk.back());
          walk.push_back(nbrs[rng() % nbrs.size()]);
        }
        auto closed = walk;
        closed.insert(closed.end(), walk.rbegin() + 1, walk.rend());
        ++walks;
        for (const auto& r : part.ribbons()) {
          out.expect(walk_crossing_parity(g, part, closed, r.id) == Parity::kEven,
                     entry.name + " closed walk with odd crossing");
          if (walk_crossing_parity(g, part, walk, r.id) != Parity::kEven) continue;
          Point sum = Point::Zero();
          for (std::size_t s = 0; s + 1 < walk.size(); ++s) {
            const int e = *g.edge_index(walk[s], walk[s + 1]);
            if (part.ribbon_of(e) == r.id) sum += pf.placement()[walk[s + 1]] - pf.placement()[walk[s]];
          }
          out.expect(sum.norm() <= 1e-9, entry.name + " ribbon vector sum is not zero");
        }
      }

      bool triangle = false;
      for (std::size_t a = 0; a < g.vertex_count(); ++a)
        for (Vertex b : g.neighbors(static_cast<Vertex>(a)))
          for (Vertex c : g.neighbors(b))
            triangle = triangle || (c != static_cast<Vertex>(a) && g.adjacent(c, static_cast<Vertex>(a)));
      out.expect(!triangle, entry.name + " has a 3-cycle");
      const auto classes = oracle::ribbon_classes(og);
      bool all_pairs = true;
      for (int a = 0; a < og.n; ++a)
        for (int b = a + 1; b < og.n; ++b) all_pairs = all_pairs && oracle::separated(og, classes, a, b);
      out.expect(all_pairs, entry.name + " has an unseparated pair");

      const auto nacs = enumerate_cartesian_nac(entry.braced);
      for (std::uint64_t i = 0; i < nacs.size(); ++i) {
        const auto q = product_embedding(entry.braced.combined_graph(), nacs.at(i));
        ++embeddings;
        out.expect(q.injective && q.morphism, entry.name + " coloring " + std::to_string(i) + " does not embed");
      }
    }
    out.note(str(walks) + " walks, " + str(embeddings) + " embeddings");
  });

  criterion(7, "Close4-cycle succeeds exactly when its precondition holds", 30.0, [](Outcome& out) {
    std::set<std::string> seen;
    std::size_t holds = 0, fails = 0;
    for (const auto& entry : corpus::instances(20)) {
      const auto& pf = entry.braced.pframework();
      const auto& g = pf.graph();
      const auto key = placement_key(pf);
      if (!seen.insert(key).second) continue;
      for (std::size_t vi = 0; vi < g.vertex_count(); ++vi) {
        const auto v = static_cast<Vertex>(vi);
        for (Vertex u : g.neighbors(v))
          for (Vertex w : g.neighbors(v)) {
            if (u == w) continue;
            const bool precondition = close_precondition_holds(pf, u, v, w);
            bool succeeded = false;
            try {
              close_four_cycle(pf, g.id(u), g.id(v), g.id(w), CloseMode::kConstructive);
              succeeded = true;
            } catch (const Error& e) {
              if (e.code() != ErrorCode::kSeparationViolated) throw;
            }
            (precondition ? holds : fails) += 1;
            out.expect(precondition == succeeded, entry.name + " " + g.id(u) + "-" + g.id(v) + "-" + g.id(w));
          }
      }
    }
    out.note(str(holds) + " triples with the precondition, " + str(fails) + " without");
    out.expect(holds > 0 && fails > 0, "scan lacks one of the two directions");
  });

  return failures;
}
