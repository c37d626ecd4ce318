#include <doctest.h>

#include <random>

#include "bracerig/coloring.hpp"
#include "bracerig/error.hpp"
#include "bracerig/rigidity.hpp"
#include "corpus.hpp"

using namespace bracerig;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("brace validation") {
  auto c4 = generate_grid(1, 1);
  BracedFramework ok(c4, {{"v0_0", "v1_1"}});
  CHECK(ok.braces().size() == 1);
  // One brace, two braced ribbons.
  int with_brace = 0;
  for (const auto& list : ok.braced_ribbons()) with_brace += list.empty() ? 0 : 1;
  CHECK(with_brace == 2);
  CHECK(ok.combined_graph().edge_count() == 5);

  CHECK(code_of([&] { BracedFramework(c4, {{"v0_0", "v1_0"}}); }) == ErrorCode::kBraceIsStructuralEdge);
  CHECK(code_of([&] { BracedFramework(c4, {{"v0_0", "v1_1"}, {"v1_1", "v0_0"}}); }) == ErrorCode::kDuplicateBrace);
  CHECK(code_of([&] { BracedFramework(generate_grid(2, 1), {{"v0_0", "v2_1"}}); }) == ErrorCode::kNotADiagonal);
  CHECK(code_of([&] { BracedFramework(c4, {{"v0_0", "zz"}}); }) == ErrorCode::kUnknownVertex);
}

TEST_CASE("braced three-cell example: braces extend their cycles' ribbons") {
  auto braced = corpus::braced_example(examples::braced_three_cells());
  CHECK(braced.partition().size() == 3);
  CHECK(braced.braces().size() == 2);
  for (std::size_t b = 0; b < braced.braces().size(); ++b) {
    int holders = 0;
    for (const auto& list : braced.braced_ribbons())
      holders += std::count(list.begin(), list.end(), static_cast<int>(b)) > 0 ? 1 : 0;
    CHECK(holders == 2);
  }
}

TEST_CASE("ribbon and bracing graphs of the drawn four- and six-ribbon examples") {
  auto top = corpus::braced_example(examples::rigid_four_ribbons());
  auto rg = ribbon_graph(top);
  auto bg = bracing_graph(top);
  CHECK(rg.vertex_count == 4);
  CHECK(rg.edges.size() == 5);
  CHECK(bg.edges.size() == 3);
  CHECK(bg.components().size() == 1);
  CHECK(rigidity_verdict(top).status == RigidityStatus::kRigid);

  auto bottom = corpus::braced_example(examples::flexible_six_ribbons());
  rg = ribbon_graph(bottom);
  bg = bracing_graph(bottom);
  CHECK(rg.vertex_count == 6);
  CHECK(rg.edges.size() == 6);
  CHECK(bg.edges.size() == 3);
  CHECK(bg.components().size() == 3);
  auto v = rigidity_verdict(bottom);
  CHECK(v.status == RigidityStatus::kFlexible);
  CHECK(v.cartesian_nac_count == 6u);
}

TEST_CASE("unbraced 3x3 grid: six isolated ribbons") {
  BracedFramework grid(generate_grid(3, 3), {});
  auto bg = bracing_graph(grid);
  CHECK(bg.vertex_count == 6);
  CHECK(bg.edges.empty());
  auto v = rigidity_verdict(grid);
  CHECK(v.status == RigidityStatus::kFlexible);
  CHECK(v.bracing_components.size() == 6);
  CHECK(v.min_braces_possible == 5);
  CHECK(v.unbraced);
  CHECK(v.cartesian_nac_count == 62u);
}

TEST_CASE("3x3 grid bracings read off the drawing") {
  auto rigid = rigidity_verdict(BracedFramework(generate_grid(3, 3), examples::grid3_rigid_braces()));
  CHECK(rigid.status == RigidityStatus::kRigid);
  CHECK(rigid.cartesian_nac_count == 0u);
  BracedFramework flexible(generate_grid(3, 3), examples::grid3_flexible_braces());
  auto v = rigidity_verdict(flexible);
  CHECK(v.status == RigidityStatus::kFlexible);
  CHECK(v.bracing_components.size() == 2);

  auto completion = minimal_brace_completion(flexible);
  CHECK(completion.feasible());
  REQUIRE(completion.added_braces.size() == 1);
  CHECK(rigidity_verdict(with_added_braces(flexible, completion.added_braces)).status == RigidityStatus::kRigid);
}

TEST_CASE("unbraced C4 verdict") {
  auto v = rigidity_verdict(BracedFramework(generate_grid(1, 1), {}));
  CHECK(v.status == RigidityStatus::kFlexible);
  CHECK(v.bracing_components.size() == 2);
  CHECK(v.cartesian_nac_count == 2u);
}

TEST_CASE("verdict refuses frameworks that are not ribbon-cutting") {
  auto gap = BracedFramework(examples::framework(examples::grid_with_missing_edge()), {});
  try {
    rigidity_verdict(gap);
    FAIL("expected a refusal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSeparationViolated);
    CHECK(e.details()["reason"] == "not_ribbon_cutting");
    CHECK(e.details()["offending_ribbons"].size() == 6);
  }
}

TEST_CASE("minimal brace completion on grids uses one fewer brace than ribbons") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      BracedFramework grid(generate_grid(a, b), {});
      auto c = minimal_brace_completion(grid);
      CHECK(c.feasible());
      CHECK(c.added_braces.size() == static_cast<std::size_t>(a + b - 1));
      CHECK(rigidity_verdict(with_added_braces(grid, c.added_braces)).status == RigidityStatus::kRigid);
    }
  CHECK(minimal_brace_completion(BracedFramework(generate_grid(3, 3), examples::grid3_rigid_braces()))
            .added_braces.empty());
}

TEST_CASE("completion is deterministic and picks the smallest diagonal") {
  BracedFramework c4(generate_grid(1, 1), {});
  auto c = minimal_brace_completion(c4);
  REQUIRE(c.added_braces.size() == 1);
  CHECK(c.added_braces[0] == IdPair{"v0_0", "v1_1"});
  BracedFramework grid(generate_grid(3, 2), {});
  CHECK(minimal_brace_completion(grid).added_braces == minimal_brace_completion(grid).added_braces);
}

TEST_CASE("bracing graph properties on the corpus") {
  std::mt19937_64 rng(99);
  for (const auto& entry : corpus::instances()) {
    const auto rg = ribbon_graph(entry.braced);
    const auto bg = bracing_graph(entry.braced);
    for (const auto& e : rg.edges) {
      CHECK(e.a < e.b);
      CHECK_FALSE(e.witnesses.empty());
    }
    for (const auto& e : bg.edges) {
      CHECK_FALSE(e.witnesses.empty());
      CHECK(std::find_if(rg.edges.begin(), rg.edges.end(),
                         [&](const RibbonGraphEdge& r) { return r.a == e.a && r.b == e.b; }) != rg.edges.end());
      for (int c : e.witnesses) CHECK(entry.braced.cycle_braced(c));
    }
    for (const auto& r : entry.braced.partition().ribbons()) CHECK(r.is_simple);

    // Monotone under adding a brace.
    const auto before = rigidity_verdict(entry.braced);
    const auto& cycles = entry.braced.graph().four_cycles();
    if (cycles.empty()) continue;
    const auto& cycle = cycles[rng() % cycles.size()];
    if (entry.braced.cycle_braced(static_cast<int>(&cycle - cycles.data()))) continue;
    const auto d = cycle.diagonals()[0];
    const auto& g = entry.braced.graph();
    const auto after = rigidity_verdict(with_added_braces(entry.braced, {{g.id(d.u), g.id(d.v)}}));
    CHECK(after.bracing_components.size() <= before.bracing_components.size());
    if (before.status == RigidityStatus::kRigid) CHECK(after.status == RigidityStatus::kRigid);

    const auto completion = minimal_brace_completion(entry.braced);
    CHECK(completion.feasible());
    CHECK(completion.added_braces.size() == before.bracing_components.size() - 1);
    CHECK(rigidity_verdict(with_added_braces(entry.braced, completion.added_braces)).status ==
          RigidityStatus::kRigid);
  }
}
