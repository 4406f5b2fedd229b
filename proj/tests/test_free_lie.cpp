#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace liequad;
using fixture::mb;
using fixture::vec;

TEST(Expand, Examples) {
  EXPECT_EQ(expand(mb({1}), 1).coefficient(make_word({0})), 1);

  const auto p = expand(mb({1, 2}), 2);
  EXPECT_EQ(p.terms().size(), 2u);
  EXPECT_EQ(p.coefficient(make_word({0, 1})), 1);
  EXPECT_EQ(p.coefficient(make_word({1, 0})), -1);

  const auto t = expand(mb({1, 2, 3}), 3);
  EXPECT_EQ(t.terms().size(), 4u);
  EXPECT_EQ(t.coefficient(make_word({0, 1, 2})), 1);
  EXPECT_EQ(t.coefficient(make_word({0, 2, 1})), -1);
  EXPECT_EQ(t.coefficient(make_word({1, 2, 0})), -1);
  EXPECT_EQ(t.coefficient(make_word({2, 1, 0})), 1);

  EXPECT_TRUE(expand(mb({1, 1}), 1).is_zero());
  EXPECT_THROW(expand(mb({3}), 2), IndexOutOfRange);
}

namespace {

TensorPoly random_element(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> len(1, 3), letter(0, static_cast<int>(n) - 1);
  std::vector<Letter> idx(static_cast<std::size_t>(len(rng)));
  for (auto& l : idx) l = static_cast<Letter>(letter(rng));
  return expand(Multibracket(idx), n);
}

}  // namespace

TEST(Expand, AntisymmetryAndJacobi) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_element(rng, 3), b = random_element(rng, 3), c = random_element(rng, 3);
    EXPECT_EQ(bracket(a, b), -bracket(b, a));
    auto jacobi = bracket(a, bracket(b, c));
    jacobi += bracket(b, bracket(c, a));
    jacobi += bracket(c, bracket(a, b));
    EXPECT_TRUE(jacobi.is_zero());
  }
}

TEST(Expand, RightNormedMatchesIteratedBracket) {
  const auto direct = expand(mb({2, 1, 3, 1}), 3);
  const auto nested = bracket(TensorPoly::generator(3, 1),
                              bracket(TensorPoly::generator(3, 0),
                                      bracket(TensorPoly::generator(3, 2), TensorPoly::generator(3, 0))));
  EXPECT_EQ(direct, nested);
}

TEST(FreeLieDim, Examples) {
  EXPECT_EQ(free_lie_dim(vec({1, 1})), 1);
  EXPECT_EQ(free_lie_dim(vec({2, 0})), 0);
  EXPECT_EQ(free_lie_dim(vec({2, 1})), 1);
  EXPECT_EQ(free_lie_dim(vec({1})), 1);
  EXPECT_EQ(free_lie_dim(vec({2, 2})), 1);
  EXPECT_EQ(free_lie_dim(vec({1, 1, 1})), 2);
  EXPECT_THROW(free_lie_dim(vec({0, 0})), Error);
}

TEST(FreeLieDim, MatchesRankOfAllBrackets) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::int64_t h = 1; h <= 5; ++h)
      for (const auto& e : degrees_of_height(n, h))
        EXPECT_EQ(free_lie_dim(e), oracle::free_lie_dim(e)) << e;
}

TEST(RowSpace, CanonicalBasisIndependentOfOrder) {
  std::vector<SparseRow> rows = {{{0, 2}, {2, 4}}, {{1, 3}, {2, -3}}, {{0, 1}, {1, 1}, {2, 1}}, {{0, 3}, {2, 6}}};
  RowSpace forward(3), backward(3);
  for (const auto& r : rows) forward.insert(r);
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) backward.insert(*it);
  EXPECT_EQ(forward.rank(), 2u);
  EXPECT_EQ(forward.rows(), backward.rows());
  EXPECT_TRUE(forward.contains({{0, 1}, {2, 2}}));
  EXPECT_FALSE(forward.contains({{2, 1}}));
}

TEST(IdealComponent, A2Examples) {
  const auto q = fixture::load("a2");
  const auto r = gen_r(q);
  EXPECT_TRUE(ideal_component(q, r, vec({1, 1})).empty());
  EXPECT_TRUE(ideal_component(q, r, vec({2, 0})).empty());
  EXPECT_EQ(ideal_component(q, r, vec({2, 1})).size(), 1u);
}

TEST(QuotientDim, A2Examples) {
  const auto q = fixture::load("a2");
  const auto r = gen_r(q);
  EXPECT_EQ(quotient_dim(q, r, vec({1, 1})), 1u);
  EXPECT_EQ(quotient_dim(q, r, vec({2, 1})), 0u);
  EXPECT_EQ(quotient_dim(q, r, vec({1, 0})), 1u);
}

TEST(QuotientEngine, MatchesDenseOracle) {
  for (const auto& name : {"a2", "a3", "diamond", "ex74"}) {
    const auto q = fixture::load(name);
    for (auto tag : {RelationTag::r, RelationTag::j, RelationTag::p}) {
      const auto s = generate_relations(q, tag);
      QuotientEngine engine(q, s);
      for (std::int64_t h = 1; h <= 4; ++h)
        for (const auto& e : degrees_of_height(q.size(), h))
          EXPECT_EQ(engine.ideal_dim(e), oracle::ideal_dim(q, s, e)) << name << ' ' << to_string(tag) << ' ' << e;
    }
  }
}

TEST(QuotientEngine, ThreadCountDoesNotChangeBases) {
  const auto q = fixture::load("d4");
  const auto s = gen_j(q);
  QuotientEngine one(q, s), four(q, s);
  one.ensure_height(6, 1);
  four.ensure_height(6, 4);
  for (std::int64_t h = 1; h <= 6; ++h)
    for (const auto& e : degrees_of_height(4, h)) EXPECT_EQ(one.ideal_basis(e), four.ideal_basis(e)) << e;
}

TEST(QuotientEngine, GeneratorOrderDoesNotMatter) {
  const auto q = fixture::load("diamond");
  const auto s = gen_r(q);
  std::vector<Multibracket> reversed(s.elements().rbegin(), s.elements().rend());
  // RelationSet sorts, so feed generators through two engines with disjoint
  // halves united in opposite orders.
  const auto half = s.elements().size() / 2;
  RelationSet a(RelationTag::custom, {s.elements().begin(), s.elements().begin() + half});
  RelationSet b(RelationTag::custom, {s.elements().begin() + half, s.elements().end()});
  QuotientEngine e1(q, unite(RelationTag::custom, a, b)), e2(q, unite(RelationTag::custom, b, a));
  for (const auto& e : degrees_of_height(4, 4)) EXPECT_EQ(e1.ideal_basis(e), e2.ideal_basis(e));
}

TEST(LieAlgebra, A2) {
  const auto q = fixture::load("a2");
  const auto g = lie_algebra(q, gen_r(q));
  EXPECT_EQ(g.total(), 3u);
  EXPECT_EQ(g.dim(vec({1, 0})), 1u);
  EXPECT_EQ(g.dim(vec({0, 1})), 1u);
  EXPECT_EQ(g.dim(vec({1, 1})), 1u);
  EXPECT_EQ(g.dim(vec({2, 1})), 0u);
  EXPECT_EQ(g.dim(vec({1, 2})), 0u);
  ASSERT_TRUE(g.nilpotency_certified_at);
  EXPECT_EQ(*g.nilpotency_certified_at, 3);
}

TEST(LieAlgebra, SingleVariable) {
  UnitForm q(1, {});
  const auto g = lie_algebra(q, RelationSet(RelationTag::r, {mb({1, 1})}));
  EXPECT_EQ(g.dim(vec({1})), 1u);
  EXPECT_EQ(g.dim(vec({2})), 0u);
  EXPECT_EQ(g.total(), 1u);
}

TEST(LieAlgebra, GradingAndNilpotencyOnFixtures) {
  for (const auto& name : fixture::names()) {
    const auto q = fixture::load(name);
    const auto roots = positive_roots(q);
    const auto g = lie_algebra(roots, gen_r(q));
    for (const auto& [e, d] : g.dims) {
      if (roots.contains(e))
        EXPECT_LE(d, 1u) << name << ' ' << e;
      else
        EXPECT_EQ(d, 0u) << name << ' ' << e;
    }
    EXPECT_LE(g.total(), roots.size()) << name;
    ASSERT_TRUE(g.nilpotency_certified_at) << name;
    EXPECT_EQ(*g.nilpotency_certified_at, roots.max_height + 1);
  }
}

TEST(IdealContains, Examples) {
  const auto a2 = fixture::load("a2");
  EXPECT_TRUE(ideal_contains(a2, gen_r(a2), mb({1, 1, 2})));
  EXPECT_FALSE(ideal_contains(a2, gen_r(a2), mb({1, 2})));
  EXPECT_FALSE(ideal_contains(a2, gen_r(a2), mb({1})));

  const auto ex74 = fixture::load("ex74");
  EXPECT_TRUE(ideal_contains(ex74, gen_r(ex74), mb({4, 3, 2, 1})));
  EXPECT_FALSE(ideal_contains(ex74, gen_j(ex74), mb({4, 3, 2, 1})));
}
