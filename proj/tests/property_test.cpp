#include <gtest/gtest.h>

#include <sstream>

#include "robust_topo/oracle.hpp"
#include "test_support.hpp"

namespace rtopo {
namespace {

using test_support::RandomOpKind;
using test_support::RandomWorkload;

std::string dump(const std::vector<InvariantViolation>& vs) {
  std::ostringstream os;
  for (const auto& v : vs) os << v.invariant << ": " << v.witness << '\n';
  return os.str();
}

class RandomSequences : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomSequences, InvariantsOracleAndFixpointHoldAfterEveryStep) {
  RandomWorkload work(GetParam(), 12);
  DynamicGraph g;
  std::size_t stretch_failures = 0;
  g.set_reorder_observer([&](const ReorderEvent& e) {
    for (std::size_t i = 0; i < e.source_set.size(); ++i)
      if (e.source_after[i] > e.source_before[i]) ++stretch_failures;
    for (std::size_t i = 0; i < e.target_set.size(); ++i)
      if (e.target_after[i] < e.target_before[i]) ++stretch_failures;
  });

  for (int step = 0; step < 80; ++step) {
    const auto op = work.step(g);
    const auto violations = g.check_invariants();
    ASSERT_TRUE(violations.empty()) << "step " << step << '\n' << dump(violations);
    ASSERT_TRUE(differential_check(g).empty()) << "step " << step;
    if (op.kind == RandomOpKind::RemoveEdge ||
        op.kind == RandomOpKind::RemoveVertex) {
      DynamicGraph copy = g;
      copy.set_reorder_observer(nullptr);
      ASSERT_TRUE(copy.rescan_cyclic_edges().empty()) << "step " << step;
    }
  }
  EXPECT_EQ(stretch_failures, 0u);
}

TEST_P(RandomSequences, ReplayIsDeterministic) {
  auto run = [seed = GetParam()] {
    RandomWorkload work(seed, 10);
    DynamicGraph g;
    std::vector<Edge> promoted;
    for (int step = 0; step < 60; ++step) {
      const auto vertices = test_support::vertices_of(g);
      if (vertices.size() >= 2 && step % 7 == 6) {
        const auto r = g.remove_vertex(work.choose(vertices));
        promoted.insert(promoted.end(), r.promoted.begin(), r.promoted.end());
      } else {
        work.step(g);
      }
    }
    return std::make_tuple(
        std::vector<VertexId>(g.representation().order().begin(),
                              g.representation().order().end()),
        g.store().all_edges(), promoted);
  };
  EXPECT_EQ(run(), run());
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomSequences,
                         ::testing::Range<std::uint64_t>(1, 201));

// Every digraph on three vertices (self-loops included), edges inserted in
// index order, then removed again one at a time.
TEST(ExhaustiveSmallGraphs, ThreeVerticesAllSubsets) {
  constexpr std::uint64_t n = 3;
  for (std::uint32_t mask = 0; mask < (1u << (n * n)); ++mask) {
    DynamicGraph g;
    std::vector<VertexId> vs;
    for (std::uint64_t i = 0; i < n; ++i) vs.push_back(g.add_vertex());
    std::vector<Edge> edges;
    for (std::uint64_t bit = 0; bit < n * n; ++bit) {
      if (mask & (1u << bit)) {
        const Edge e{vs[bit / n], vs[bit % n]};
        edges.push_back(e);
        g.add_edge(e.source, e.target);
      }
    }
    ASSERT_EQ(g.has_cycles(), test_support::warshall_has_cycle(vs, edges))
        << "mask " << mask;
    ASSERT_TRUE(g.check_invariants().empty()) << "mask " << mask;
    while (!edges.empty()) {
      const Edge e = edges.front();
      edges.erase(edges.begin());
      g.remove_edge(e.source, e.target);
      ASSERT_EQ(g.has_cycles(), test_support::warshall_has_cycle(vs, edges));
      ASSERT_TRUE(g.check_invariants().empty());
    }
  }
}

}  // namespace
}  // namespace rtopo
