#include <gtest/gtest.h>

#include "circulant/adams.hpp"
#include "circulant/oracle.hpp"
#include "circulant/theta.hpp"
#include "support/brute.hpp"

using namespace circulant;

namespace {

LabeledGraph from_edges(int n, const brute::EdgeSet& edges) {
  std::vector<std::pair<Vertex, Vertex>> pairs(edges.begin(), edges.end());
  return LabeledGraph(n, pairs);
}

}  // namespace

TEST(TriangleCount, Examples) {
  EXPECT_EQ(triangle_count(CirculantGraph(16, {1, 3, 7})), 0);
  EXPECT_EQ(triangle_count(CirculantGraph(16, {2, 3, 5})), 32);
  EXPECT_EQ(triangle_count(CirculantGraph(16, {1, 2, 7})), 32);
  EXPECT_EQ(triangle_count(CirculantGraph(3, {1})), 1);
  EXPECT_EQ(triangle_count(CirculantGraph(6, {2})), 2);
  EXPECT_EQ(triangle_count(CirculantGraph(6, {1, 2, 3})), 20);
}

TEST(TriangleCount, BothMethodsMatchTripleEnumeration) {
  for (int n = 3; n <= 18; ++n) {
    for (const auto& js : brute::jump_sets(n, 4)) {
      const CirculantGraph g(n, js);
      const auto expected = brute::triangles(n, brute::circulant_edges(n, js));
      ASSERT_EQ(triangle_count(g), expected) << g.to_string();
      ASSERT_EQ(triangle_count(adjacency(g)), expected) << g.to_string();
    }
  }
}

TEST(Bipartite, Examples) {
  EXPECT_TRUE(is_bipartite(adjacency(CirculantGraph(16, {1, 3, 7}))));
  EXPECT_FALSE(is_bipartite(adjacency(CirculantGraph(16, {2, 3, 5}))));
  EXPECT_FALSE(is_bipartite(adjacency(CirculantGraph(5, {1}))));
  EXPECT_FALSE(is_bipartite(adjacency(CirculantGraph(4, {1, 2}))));
}

TEST(InvariantScreen, Examples) {
  const auto d = invariant_screen(CirculantGraph(16, {1, 3, 7}), CirculantGraph(16, {2, 3, 5}));
  ASSERT_TRUE(d);
  EXPECT_EQ(d->invariant, "triangle count");
  EXPECT_EQ(d->first, "0");
  EXPECT_EQ(d->second, "32");
  EXPECT_EQ(d->describe(), "triangle count 0 vs 32");

  const auto deg = invariant_screen(CirculantGraph(16, {1, 3}), CirculantGraph(16, {2, 3, 5}));
  ASSERT_TRUE(deg);
  EXPECT_EQ(deg->invariant, "degree");

  EXPECT_FALSE(invariant_screen(CirculantGraph(16, {1, 2, 7}), CirculantGraph(16, {2, 3, 5})));
}

TEST(Isomorphic, ThetaWitness) {
  const CirculantGraph g(16, {1, 2, 7});
  const CirculantGraph h(16, {2, 3, 5});
  const auto ga = adjacency(g);
  const auto ha = adjacency(h);
  EXPECT_TRUE(verify_isomorphism(ga, ha, vertex_permutation(ThetaTransform(16, 2, 2))));
  const auto witness = isomorphic(g, h);
  ASSERT_TRUE(witness);
  EXPECT_TRUE(verify_isomorphism(ga, ha, *witness));
  EXPECT_FALSE(isomorphic(CirculantGraph(16, {1, 3, 7}), h));
}

TEST(Isomorphic, WorksOnNonCirculantImages) {
  const CirculantGraph g(16, {2, 3, 5});
  const auto image = theta_exact_image(g, ThetaTransform(16, 2, 1));
  ASSERT_FALSE(image.circulant());
  const auto witness = isomorphic(image.labeled, adjacency(g));
  ASSERT_TRUE(witness);
  EXPECT_TRUE(verify_isomorphism(image.labeled, adjacency(g), *witness));
}

TEST(Isomorphic, HalfChordGraphs) {
  const auto a = adjacency(CirculantGraph(8, {1, 4}));
  const auto b = adjacency(CirculantGraph(8, {3, 4}));
  ASSERT_TRUE(isomorphic(a, b));
  EXPECT_TRUE(verify_isomorphism(a, b, *isomorphic(a, b)));
}

TEST(Isomorphic, AgreesWithNaiveSearch) {
  for (int n = 5; n <= 9; ++n) {
    const auto sets = brute::jump_sets(n, 3);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = i; j < sets.size(); ++j) {
        if (sets[i].size() != sets[j].size()) continue;
        const auto ge = brute::circulant_edges(n, sets[i]);
        const auto he = brute::circulant_edges(n, sets[j]);
        const bool expected = brute::isomorphic_naive(n, ge, he, true);
        const auto found = isomorphic(CirculantGraph(n, sets[i]), CirculantGraph(n, sets[j]));
        ASSERT_EQ(found.has_value(), expected) << n << " " << i << " " << j;
      }
    }
  }
}

TEST(Isomorphic, AgreesWithNaiveOnLabeledImages) {
  // Neither side vertex-transitive-by-labeling: no vertex pinning allowed.
  const int n = 8;
  for (const auto& js : brute::jump_sets(n, 2)) {
    const auto edges = brute::circulant_edges(n, js);
    const auto image = brute::relabel(edges, [](int x) { return brute::theta(8, 2, 1, x); });
    for (const auto& other : brute::jump_sets(n, 2)) {
      const auto other_image =
          brute::relabel(brute::circulant_edges(n, other), [](int x) { return brute::theta(8, 4, 1, x); });
      if (image.size() != other_image.size()) continue;
      const bool expected = brute::isomorphic_naive(n, image, other_image, false);
      const auto found = isomorphic(from_edges(n, image), from_edges(n, other_image));
      ASSERT_EQ(found.has_value(), expected);
    }
  }
}

TEST(Isomorphic, BoundExceeded) {
  OracleConfig small;
  small.order_bound = 20;
  try {
    isomorphic(CirculantGraph(27, {1, 3, 8, 10}), CirculantGraph(27, {3, 4, 5, 13}), small);
    FAIL() << "expected bound error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::bound_exceeded);
  }
}

TEST(ClassifyPair, Examples) {
  const CirculantGraph a(16, {1, 2, 7});
  const CirculantGraph b(16, {2, 3, 5});
  EXPECT_EQ(classify_pair(a, b), Classification(verdict::Type2{2, 2}));
  EXPECT_EQ(classify_pair(b, a), Classification(verdict::Type2{2, 2}));
  for (const auto& x : units(16)) EXPECT_NE(adams_image(a, x), b);

  const auto c = classify_pair(CirculantGraph(16, {1, 3, 7}), b);
  ASSERT_TRUE(std::holds_alternative<verdict::NotIsomorphic>(c));
  EXPECT_EQ(std::get<verdict::NotIsomorphic>(c).invariant, "triangle count");
  EXPECT_EQ(describe(c), "NotIsomorphic: triangle count 0 vs 32");

  const CirculantGraph g(27, {1, 3, 8, 10});
  EXPECT_EQ(classify_pair(g, g), Classification(verdict::Identical{}));
  EXPECT_EQ(classify_pair(g, CirculantGraph(27, {4, 5, 12, 13})), Classification(verdict::Type1{4}));
  EXPECT_EQ(classify_pair(g, CirculantGraph(27, {3, 4, 5, 13})), Classification(verdict::Type2{3, 1}));
  EXPECT_EQ(classify_pair(CirculantGraph(27, {1, 3}), CirculantGraph(26, {1, 3})),
            Classification(verdict::NotIsomorphic{"order", "order 27 vs 26"}));
}

TEST(ClassifyPair, TypeOneAfterTypeTwo) {
  // 2 * {3,4,5,13} = {6,8,10,26} -> {1,6,8,10}; no single multiplier or
  // theta reaches it from C27(1,3,8,10).
  const CirculantGraph g(27, {1, 3, 8, 10});
  const auto target = adams_image(CirculantGraph(27, {3, 4, 5, 13}), UnitMultiplier(27, 2));
  const auto c = classify_pair(g, target);
  const auto tag = tag_name(c);
  EXPECT_TRUE(tag == "type1-after-type2" || tag == "type2") << describe(c);
}

TEST(ClassifyPair, VerdictsAgreeWithOracle) {
  for (int n : {8, 10, 12}) {
    const auto sets = brute::jump_sets(n, 3);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = 0; j < sets.size(); ++j) {
        const CirculantGraph g(n, sets[i]);
        const CirculantGraph h(n, sets[j]);
        const auto c = classify_pair(g, h);
        const bool iso = isomorphic(g, h).has_value();
        ASSERT_EQ(!std::holds_alternative<verdict::NotIsomorphic>(c), iso)
            << g.to_string() << " " << h.to_string() << " " << describe(c);
        ASSERT_EQ(std::holds_alternative<verdict::NotIsomorphic>(classify_pair(h, g)),
                  std::holds_alternative<verdict::NotIsomorphic>(c));
      }
    }
  }
}
