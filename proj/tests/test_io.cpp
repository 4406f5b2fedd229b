#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace liequad;
using fixture::mb;

TEST(QformParser, CoefficientAndEdgeSyntaxAgree) {
  const auto a = parse_qform("n 4\na 1 2 -1\na 1 3 -1\na 2 4 -1\na 3 4 -1\na 1 4 1\n");
  const auto b = parse_qform("# comment\nn 4\nedge 1 2 solid\nedge 1 3 solid\nedge 2 4 solid\nedge 3 4 solid\n"
                             "edge 4 1 broken  # trailing comment\n");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, fixture::load("diamond"));
  EXPECT_EQ(parse_qform("n 4\nedge 1 4 broken 2\n").coefficient(0, 3), 2);
}

TEST(QformParser, Errors) {
  EXPECT_THROW(parse_qform(""), ParseError);
  EXPECT_THROW(parse_qform("n x"), ParseError);
  EXPECT_THROW(parse_qform("a 1 2 -1\nn 2"), ParseError);
  EXPECT_THROW(parse_qform("n 2\na 1 2 -1\nedge 1 2 solid"), ParseError);
  EXPECT_THROW(parse_qform("n 2\na 1 3 -1"), ParseError);
  EXPECT_THROW(parse_qform("n 2\na 1 1 -1"), ParseError);
  EXPECT_THROW(parse_qform("n 2\na 1 2 -1\na 2 1 -1"), ParseError);
  EXPECT_THROW(parse_qform("n 2\nedge 1 2 dotted"), ParseError);
  EXPECT_THROW(parse_qform("n 2\nfoo"), ParseError);
  EXPECT_THROW(load_qform("/nonexistent.qform"), ParseError);
}

TEST(QformParser, RoundTrip) {
  for (const auto& name : fixture::names()) {
    const auto q = fixture::load(name);
    EXPECT_EQ(parse_qform(to_qform(q)), q) << name;
    EXPECT_EQ(form_from_json(to_json(q)), q) << name;
  }
}

TEST(Json, RelationSetRoundTrip) {
  const auto q = fixture::load("diamond");
  const auto j = gen_j(q);
  const auto doc = to_json(j);
  EXPECT_EQ(doc["tag"], "j");
  EXPECT_EQ(doc["elements"][0], Json({1, 4}));
  EXPECT_EQ(relation_set_from_json(Json::parse(doc.dump()), 4), j);
  EXPECT_THROW(relation_set_from_json(Json::parse(R"({"tag":"j","elements":[[5]]})"), 4), ParseError);
  EXPECT_THROW(relation_set_from_json(Json::parse(R"({"tag":"zz","elements":[]})"), 4), ParseError);
}

TEST(Json, RootsAndDims) {
  const auto q = fixture::load("a2");
  const auto roots = to_json(positive_roots(q));
  EXPECT_EQ(roots["count"], 3);
  EXPECT_EQ(roots["max_height"], 2);
  EXPECT_EQ(roots["roots"], Json::parse("[[0,1],[1,0],[1,1]]"));
  const auto dims = to_json(lie_algebra(q, gen_r(q)));
  EXPECT_EQ(dims["total"], 3);
  EXPECT_EQ(dims["nilpotent_at"], 3);
  EXPECT_EQ(dims["dims"].size(), 3u);
  EXPECT_EQ(dims["dims"][2]["degree"], Json::parse("[1,1]"));
}

TEST(IndexList, Parse) {
  EXPECT_EQ(parse_index_list("4,3,2,1"), (std::vector<std::int64_t>{4, 3, 2, 1}));
  EXPECT_EQ(parse_index_list("[1, 2]"), (std::vector<std::int64_t>{1, 2}));
  EXPECT_THROW(parse_index_list("1,,2"), ParseError);
  EXPECT_THROW(parse_index_list("a"), ParseError);
  EXPECT_THROW(Multibracket::from_one_based({0}, 2), IndexOutOfRange);
  EXPECT_EQ(to_string(mb({1, 2, 4})), "1,2,4");
}
