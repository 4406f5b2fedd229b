#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace liequad;
using fixture::mb;
using fixture::vec;

TEST(PositiveRoots, A2) {
  const auto r = positive_roots(fixture::load("a2"));
  EXPECT_EQ(r.roots, (std::set<IntVector>{vec({1, 0}), vec({0, 1}), vec({1, 1})}));
  EXPECT_EQ(r.max_height, 2);
}

TEST(PositiveRoots, SingleVariable) {
  const auto r = positive_roots(UnitForm(1, {}));
  EXPECT_EQ(r.size(), 1u);
  EXPECT_EQ(r.max_height, 1);
}

TEST(PositiveRoots, Diamond) {
  const auto r = positive_roots(fixture::load("diamond"));
  std::set<IntVector> expected = {vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, 1, 0}), vec({0, 0, 0, 1}),
                                  vec({1, 1, 0, 0}), vec({1, 0, 1, 0}), vec({0, 1, 0, 1}), vec({0, 0, 1, 1}),
                                  vec({1, 1, 1, 0}), vec({0, 1, 1, 1}), vec({1, 1, 1, 1})};
  EXPECT_EQ(r.roots, expected);
  EXPECT_EQ(r.max_height, 4);
}

TEST(PositiveRoots, MatchBoxBruteForce) {
  for (const auto& name : fixture::names()) {
    const auto q = fixture::load(name);
    EXPECT_EQ(positive_roots(q).roots, oracle::box_roots(q)) << name;
  }
}

TEST(PositiveRoots, BudgetExceeded) {
  EXPECT_THROW(positive_roots(fixture::load("a4"), 5), RootBudgetExceeded);
  EXPECT_NO_THROW(positive_roots(fixture::load("a4"), 10));
}

TEST(WeylChain, EveryRootDescends) {
  for (const auto& name : fixture::names()) {
    const auto q = fixture::load(name);
    const auto roots = positive_roots(q);
    for (const auto& z : roots.roots) {
      const auto c = weyl_chain(q, z);
      ASSERT_FALSE(c.steps.empty());
      EXPECT_EQ(c.steps.front(), z);
      EXPECT_EQ(c.steps.back().height(), 1);
      for (std::size_t k = 0; k < c.steps.size(); ++k) {
        EXPECT_TRUE(is_root(q, c.steps[k]));
        if (k + 1 < c.steps.size()) {
          auto diff = c.steps[k] - c.steps[k + 1];
          EXPECT_EQ(diff.height(), 1);
          EXPECT_TRUE(diff.is_nonnegative());
        }
      }
    }
  }
}

TEST(WeylChain, RejectsNonRoots) {
  const auto q = fixture::load("a2");
  EXPECT_THROW(weyl_chain(q, vec({2, 1})), NotARoot);
  EXPECT_THROW(weyl_chain(q, vec({0, 0})), NotARoot);
}

// x + y is a root exactly when <x,y> = -1, for any two roots x, y.
TEST(RootPairs, SumIsRootIffPairingMinusOne) {
  for (const auto& name : fixture::names()) {
    const auto q = fixture::load(name);
    const auto roots = positive_roots(q);
    for (const auto& x : roots.roots)
      for (const auto& y : roots.roots)
        EXPECT_EQ(is_root(q, x + y), pairing(q, x, y) == -1) << name << ' ' << x << ' ' << y;
  }
}

TEST(RootSequences, A2) {
  const auto s = root_sequences(fixture::load("a2"));
  EXPECT_EQ(s, (std::vector<Multibracket>{mb({1}), mb({2}), mb({1, 2}), mb({2, 1})}));
}

TEST(RootSequences, SingleVariable) { EXPECT_EQ(root_sequences(UnitForm(1, {})).size(), 1u); }

TEST(RootSequences, DegreesAreRootsAndCoverAllRoots) {
  for (const auto& name : fixture::names()) {
    const auto q = fixture::load(name);
    const auto roots = positive_roots(q);
    std::set<IntVector> covered;
    for (const auto& w : root_sequences(q)) {
      const auto e = w.degree(q.size());
      EXPECT_TRUE(roots.contains(e)) << name << ' ' << w;
      covered.insert(e);
    }
    EXPECT_EQ(covered, roots.roots) << name;
  }
}

TEST(RootSequences, Counts) {
  EXPECT_EQ(root_sequences(fixture::load("a3")).size(), 11u);
  EXPECT_EQ(root_sequences(fixture::load("a4")).size(), 26u);
  EXPECT_EQ(root_sequences(fixture::load("d4")).size(), 46u);
  EXPECT_THROW(root_sequences(fixture::load("d4"), 10), SequenceBudgetExceeded);
}
