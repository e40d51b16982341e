#include <gtest/gtest.h>

#include "circulant/core.hpp"
#include "support/brute.hpp"

using namespace circulant;

namespace {

std::vector<int> values(const JumpSet& j) { return {j.values().begin(), j.values().end()}; }
std::vector<int> values(const ConnectionSet& c) { return {c.values().begin(), c.values().end()}; }

}  // namespace

TEST(ReflexiveReduce, ScaledJumpsOfOrder27) {
  EXPECT_EQ(values(reflexive_reduce(std::vector<int>{2, 6, 16, 20}, 27)),
            (std::vector<int>{2, 6, 7, 11}));
  EXPECT_EQ(values(reflexive_reduce(std::vector<int>{4, 12, 32, 40}, 27)),
            (std::vector<int>{4, 5, 12, 13}));
  EXPECT_EQ(values(reflexive_reduce(std::vector<int>{1, 3, 8, 10}, 27)),
            (std::vector<int>{1, 3, 8, 10}));
}

TEST(ReflexiveReduce, RejectsZeroAndEmpty) {
  try {
    reflexive_reduce(std::vector<int>{3, 27}, 27);
    FAIL() << "expected zero jump error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::zero_jump);
  }
  EXPECT_THROW(reflexive_reduce(std::vector<int>{}, 27), Error);
  EXPECT_THROW(reflexive_reduce(std::vector<int>{1}, 2), Error);
}

TEST(ReflexiveReduce, Idempotent) {
  for (int n = 3; n <= 30; ++n) {
    for (std::int64_t a = -40; a <= 40; a += 7) {
      std::vector<std::int64_t> raw{a, a + 1, 3 * a + 2};
      if (std::any_of(raw.begin(), raw.end(), [n](std::int64_t v) { return v % n == 0; })) continue;
      const auto once = reflexive_reduce(raw, n);
      EXPECT_EQ(reflexive_reduce(once.values(), n), once);
      EXPECT_EQ(values(once), brute::reduce(n, raw));
    }
  }
}

TEST(JumpSet, Invariants) {
  EXPECT_THROW(JumpSet(16, {9}), Error);
  EXPECT_THROW(JumpSet(16, {0}), Error);
  EXPECT_THROW(JumpSet(16, {}), Error);
  EXPECT_THROW(JumpSet(2, {1}), Error);
  EXPECT_EQ(values(JumpSet(16, {7, 2, 2, 1})), (std::vector<int>{1, 2, 7}));
}

TEST(SymmetricClosure, Examples) {
  EXPECT_EQ(values(symmetric_closure(JumpSet(27, {1, 3, 8, 10}))),
            (std::vector<int>{1, 3, 8, 10, 17, 19, 24, 26}));
  EXPECT_EQ(values(symmetric_closure(JumpSet(16, {2, 3, 5}))),
            (std::vector<int>{2, 3, 5, 11, 13, 14}));
  EXPECT_EQ(values(symmetric_closure(JumpSet(8, {1, 4}))), (std::vector<int>{1, 4, 7}));
}

TEST(SymmetricClosure, SizeFormula) {
  for (int n = 3; n <= 20; ++n) {
    for (const auto& js : brute::jump_sets(n, 4)) {
      const JumpSet j(n, js);
      const auto expected = 2 * j.size() - (j.has_half() ? 1 : 0);
      EXPECT_EQ(symmetric_closure(j).size(), expected);
    }
  }
}

TEST(Adjacency, Triangle) {
  const auto g = adjacency(CirculantGraph(3, {1}));
  ASSERT_EQ(g.edges().size(), 3u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_TRUE(g.adjacent(0, 2));
}

TEST(Adjacency, C16_2_3_5) {
  const CirculantGraph c(16, {2, 3, 5});
  const auto g = adjacency(c);
  EXPECT_EQ(g.edge_count_simple(), 48);
  EXPECT_EQ(brute::circulant_edges(16, {2, 3, 5}).size(), 48u);
  for (Vertex v = 0; v < 16; ++v) EXPECT_EQ(g.degree(v), 6);
}

TEST(Adjacency, HalfChordCountsTwice) {
  const CirculantGraph c(4, {1, 2});
  const auto g = adjacency(c);
  EXPECT_EQ(c.degree(), 3);
  EXPECT_EQ(c.edge_count_weighted(), 8);
  EXPECT_EQ(c.edge_count_simple(), 6);
  EXPECT_EQ(g.edge_count_weighted(), 8);
  EXPECT_EQ(g.edge_count_simple(), 6);
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_TRUE(g.adjacent(1, 3));
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 3);
}

TEST(LabeledGraph, CollapsesRepeatsAndRejectsLoops) {
  const std::vector<std::pair<Vertex, Vertex>> doubled{{0, 1}, {1, 0}, {0, 3}};
  const LabeledGraph g(6, doubled);
  EXPECT_EQ(g.edge_count_simple(), 2);
  // {0,3} is antipodal in Z_6.
  EXPECT_EQ(g.edge_count_weighted(), 3);
  const std::vector<std::pair<Vertex, Vertex>> loop{{2, 2}};
  EXPECT_THROW(LabeledGraph(6, loop), Error);
  const std::vector<std::pair<Vertex, Vertex>> outside{{0, 6}};
  EXPECT_THROW(LabeledGraph(6, outside), Error);
}

TEST(LabeledGraph, ThetaMovesAntipodalChordsAndStaysCirculant) {
  // theta_{6,2,1} sends the chord {1,4} to {3,2}, yet the image of C6(1,3)
  // is still circulant as a simple graph.
  const auto image = brute::relabel(brute::circulant_edges(6, {1, 3}),
                                    [](int x) { return brute::theta(6, 2, 1, x); });
  ASSERT_TRUE(brute::circulant_jumps(6, image).has_value());
  std::vector<std::pair<Vertex, Vertex>> pairs(image.begin(), image.end());
  EXPECT_EQ(detect_circulant(LabeledGraph(6, pairs)), JumpSet(6, *brute::circulant_jumps(6, image)));
}

TEST(DetectCirculant, RoundTrips) {
  EXPECT_EQ(detect_circulant(adjacency(CirculantGraph(16, {1, 2, 7}))), JumpSet(16, {1, 2, 7}));
  EXPECT_EQ(detect_circulant(adjacency(CirculantGraph(27, {3, 4, 5, 13}))),
            JumpSet(27, {3, 4, 5, 13}));
}

TEST(DetectCirculant, ThetaImageOfC16_2_3_5IsNotCirculant) {
  // Image edges of theta_{16,2,1}, computed with the test-only relabeling.
  const auto image = brute::relabel(brute::circulant_edges(16, {2, 3, 5}),
                                    [](int x) { return brute::theta(16, 2, 1, x); });
  EXPECT_FALSE(brute::circulant_jumps(16, image).has_value());
  std::vector<std::pair<Vertex, Vertex>> pairs(image.begin(), image.end());
  EXPECT_FALSE(detect_circulant(LabeledGraph(16, pairs)).has_value());
}

TEST(DetectCirculant, ExhaustiveRoundTripAndCounts) {
  for (int n = 3; n <= 20; ++n) {
    for (const auto& js : brute::jump_sets(n, n / 2)) {
      const CirculantGraph g(n, js);
      const auto adj = adjacency(g);
      ASSERT_EQ(detect_circulant(adj), g.jumps()) << g.to_string();
      const auto k = static_cast<std::int64_t>(js.size());
      EXPECT_EQ(adj.edge_count_weighted(), n * k);
      EXPECT_EQ(adj.edge_count_simple(), n * k - (g.jumps().has_half() ? n / 2 : 0));
      for (Vertex v = 0; v < n; ++v) ASSERT_EQ(adj.degree(v), g.degree());
    }
  }
}

TEST(CirculantGraph, TextForms) {
  const CirculantGraph g(27, {10, 1, 8, 3});
  EXPECT_EQ(g.to_string(), "C27(1,3,8,10)");
  EXPECT_EQ(g.to_string_full(), "C27(1,3,8,10,17,19,24,26)");
}
