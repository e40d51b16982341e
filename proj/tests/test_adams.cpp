#include <gtest/gtest.h>

#include "circulant/adams.hpp"
#include "circulant/oracle.hpp"
#include "support/brute.hpp"

using namespace circulant;

namespace {

std::vector<int> unit_values(int n) {
  std::vector<int> out;
  for (const auto& u : units(n)) out.push_back(u.value());
  return out;
}

}  // namespace

TEST(Units, Examples) {
  EXPECT_EQ(unit_values(16), (std::vector<int>{1, 3, 5, 7, 9, 11, 13, 15}));
  EXPECT_EQ(unit_values(27), brute::units(27));
  EXPECT_EQ(unit_values(27).size(), 18u);
  EXPECT_EQ(unit_values(3), (std::vector<int>{1, 2}));
}

TEST(UnitMultiplier, RejectsNonUnits) {
  EXPECT_THROW(UnitMultiplier(16, 2), Error);
  EXPECT_THROW(UnitMultiplier(16, 0), Error);
  EXPECT_THROW(UnitMultiplier(16, 16), Error);
}

TEST(AdamsImage, Examples) {
  const CirculantGraph g(27, {1, 3, 8, 10});
  EXPECT_EQ(adams_image(g, UnitMultiplier(27, 2)), CirculantGraph(27, {2, 6, 7, 11}));
  EXPECT_EQ(adams_image(g, UnitMultiplier(27, 4)), CirculantGraph(27, {4, 5, 12, 13}));
  EXPECT_EQ(adams_image(g, UnitMultiplier(27, 1)), g);
  EXPECT_THROW(adams_image(g, UnitMultiplier(16, 3)), Error);
}

TEST(Type1Set, Examples) {
  const auto a = type1_set(CirculantGraph(16, {1, 2, 4, 7}));
  EXPECT_EQ(a.members, (std::vector<CirculantGraph>{CirculantGraph(16, {1, 2, 4, 7}),
                                                    CirculantGraph(16, {3, 4, 5, 6})}));
  EXPECT_EQ(a.witnesses.at(CirculantGraph(16, {3, 4, 5, 6})).value(), 3);

  // 3*{2,3,5} = {6,9,15} -> {1,6,7}; the other units repeat one of the two.
  const auto b = type1_set(CirculantGraph(16, {2, 3, 5}));
  EXPECT_EQ(b.members, (std::vector<CirculantGraph>{CirculantGraph(16, {1, 6, 7}),
                                                    CirculantGraph(16, {2, 3, 5})}));

  const auto c = type1_set(CirculantGraph(5, {1}));
  EXPECT_EQ(c.members, (std::vector<CirculantGraph>{CirculantGraph(5, {1}), CirculantGraph(5, {2})}));
}

TEST(Type1Contains, Examples) {
  const CirculantGraph g(27, {1, 3, 8, 10});
  EXPECT_EQ(type1_contains(g, JumpSet(27, {4, 5, 12, 13}))->value(), 4);
  EXPECT_FALSE(type1_contains(CirculantGraph(16, {1, 2, 7}), JumpSet(16, {1, 3, 7})));
  EXPECT_EQ(type1_contains(g, g.jumps())->value(), 1);
}

TEST(Type1Compose, Examples) {
  EXPECT_EQ(type1_compose(UnitMultiplier(16, 3), UnitMultiplier(16, 3)).value(), 9);
  const UnitMultiplier two(27, 2);
  EXPECT_EQ(type1_compose(two, two).value(), 4);
  const CirculantGraph g(27, {1, 3, 8, 10});
  EXPECT_EQ(adams_image(adams_image(g, two), two), CirculantGraph(27, {4, 5, 12, 13}));
  for (int n = 3; n <= 40; ++n) {
    for (const auto& u : units(n)) {
      EXPECT_EQ(type1_compose(u, u.inverse()).value(), 1) << n << " " << u.value();
    }
  }
}

TEST(Type1Properties, GroupActionOrbitAndSymmetry) {
  for (int n = 3; n <= 20; ++n) {
    const auto us = units(n);
    for (const auto& js : brute::jump_sets(n, 4)) {
      const CirculantGraph g(n, js);
      for (const auto& x : us) {
        const auto gx = adams_image(g, x);
        ASSERT_EQ(gx.jumps().size(), g.jumps().size());
        ASSERT_EQ(gx.degree(), g.degree());
        ASSERT_EQ(adams_image(g, UnitMultiplier(n, n - x.value())), gx);
        for (const auto& y : us) {
          ASSERT_EQ(adams_image(gx, y), adams_image(g, type1_compose(x, y)));
        }
      }
      const auto set = type1_set(g);
      EXPECT_EQ(us.size() % set.members.size(), 0u) << g.to_string();
      EXPECT_LE(set.members.size(), us.size() / 2);
      EXPECT_TRUE(std::is_sorted(set.members.begin(), set.members.end()));
      for (const auto& m : set.members) {
        const auto w = set.witnesses.at(m);
        ASSERT_EQ(adams_image(g, w), m);
        // Least witness: no smaller unit reaches m.
        for (const auto& u : us) {
          if (u.value() >= w.value()) break;
          ASSERT_NE(adams_image(g, u), m);
        }
      }
    }
  }
}

TEST(Type1Properties, MembersAreIsomorphicUnderOracle) {
  for (int n : {12, 15, 18, 20, 24}) {
    for (const auto& js : brute::jump_sets(n, 3)) {
      if (js.size() < 2 || js.front() != 1) continue;
      const CirculantGraph g(n, js);
      for (const auto& m : type1_set(g).members) {
        ASSERT_TRUE(isomorphic(g, m).has_value()) << g.to_string() << " " << m.to_string();
      }
    }
  }
}
