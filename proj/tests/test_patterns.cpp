#include <gtest/gtest.h>

#include "dfree/construct.hpp"
#include "dfree/decompose.hpp"
#include "dfree/oracle.hpp"
#include "dfree/patterns.hpp"
#include "support.hpp"

namespace dfree {
namespace {

using Edges = std::vector<std::pair<int, int>>;

TEST(Pattern, Definitions) {
  const Tournament& t5 = pattern(BasicKind::T5);
  EXPECT_TRUE(t5.edge(0, 1));
  EXPECT_TRUE(t5.edge(3, 0));
  EXPECT_TRUE(pattern(BasicKind::P7).edge(0, 4));
  EXPECT_EQ(pattern(BasicKind::P7Minus),
            induced(pattern(BasicKind::P7), {0, 1, 2, 3, 4, 5}).tournament);
  EXPECT_EQ(basic_size(BasicKind::P7Minus), 6);
  EXPECT_EQ(basic_kind_from_string(to_string(BasicKind::P7Minus)), BasicKind::P7Minus);
  EXPECT_THROW(basic_kind_from_string("P8"), PreconditionViolated);
}

TEST(Pattern, DeltaRoles) {
  const Tournament& d = delta122();
  EXPECT_TRUE(d.edge(0, 1) && d.edge(0, 2));
  EXPECT_TRUE(d.edge(1, 3) && d.edge(1, 4) && d.edge(2, 3) && d.edge(2, 4));
  EXPECT_TRUE(d.edge(3, 0) && d.edge(4, 0));
}

TEST(Pattern, DegreePartition) {
  for (int v : p7minus_d1()) EXPECT_EQ(pattern(BasicKind::P7Minus).out_degree(v), 3);
  for (int v : p7minus_d2()) EXPECT_EQ(pattern(BasicKind::P7Minus).out_degree(v), 2);
}

TEST(HPattern, EdgeSets) {
  EXPECT_EQ(h_pattern(5).graph.edges(), (Edges{{0, 2}, {0, 4}, {1, 4}, {2, 3}}));
  EXPECT_EQ(h_pattern(6).graph.edges(), (Edges{{0, 1}, {0, 5}, {1, 2}, {1, 3}, {2, 4}, {3, 5}}));
  // The seventh vertex attaches to the first three positions.
  EXPECT_EQ(h_pattern(7).graph.edges(),
            (Edges{{0, 1}, {0, 5}, {0, 6}, {1, 2}, {1, 3}, {1, 6}, {2, 4}, {2, 6}, {3, 5}}));
  EXPECT_THROW(h_pattern(4), PreconditionViolated);
}

TEST(HPattern, RealizedByTheBasics) {
  const std::array<std::pair<BasicKind, int>, 3> cases{
      {{BasicKind::T5, 5}, {BasicKind::P7Minus, 6}, {BasicKind::P7, 7}}};
  for (auto [k, size] : cases) {
    const auto g = backedge_graph(pattern(k), h_ordering(k));
    OrderedGraph byp(size, identity_ordering(size));
    for (auto [a, b] : g.edges()) byp.add_edge(g.position(a), g.position(b));
    EXPECT_EQ(byp.edges(), h_pattern(size).graph.edges()) << to_string(k);
  }
}

TEST(FindDelta, Examples) {
  const auto w = find_delta122(delta122());
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (Delta122Witness{0, {1, 2}, {3, 4}}));
  EXPECT_TRUE(validate(delta122(), *w));
  for (int n : {1, 5, 9, 40}) EXPECT_FALSE(find_delta122(Tournament(n)));
  EXPECT_FALSE(find_delta122(pattern(BasicKind::T5)));
  EXPECT_FALSE(find_delta122(pattern(BasicKind::P7)));
  EXPECT_TRUE(has_delta122_through(delta122(), 3));
  EXPECT_FALSE(validate(delta122(), Delta122Witness{1, {0, 2}, {3, 4}}));
}

TEST(FindDelta, AgreesWithOracleOnAllSixVertexTournaments) {
  for (std::uint64_t m = 0; m < (1u << 15); ++m) {
    const Tournament t = tournament_from_mask(6, m);
    const auto w = find_delta122(t);
    ASSERT_EQ(!w, oracle_is_free(t)) << to_tmt(t);
    if (w) ASSERT_TRUE(validate(t, *w));
  }
}

TEST(FindBasic, Examples) {
  const auto c = find_basic_copy(pattern(BasicKind::P7));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->kind, BasicKind::P7);
  EXPECT_EQ(c->vertices.size(), 7u);
  EXPECT_TRUE(validate(pattern(BasicKind::P7), *c));
  EXPECT_FALSE(find_basic_copy(Tournament(12)));

  const Tournament s = substitute(Tournament(3), 1, pattern(BasicKind::T5)).tournament;
  const auto t5 = find_basic_copy(s);
  ASSERT_TRUE(t5);
  EXPECT_EQ(t5->kind, BasicKind::T5);
  auto vs = t5->vertices;
  std::sort(vs.begin(), vs.end());
  EXPECT_EQ(vs, (std::vector<int>{1, 2, 3, 4, 5}));
}

TEST(FindBasic, StructuralSearchMatchesSubsetScan) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto [t, tree] = gen_free(test::params(14 + static_cast<int>(seed % 8), seed));
    const auto a = find_basic_copy(t);
    const auto b = find_basic_copy_by_subsets(t);
    ASSERT_EQ(a.has_value(), b.has_value()) << seed;
    if (a) EXPECT_TRUE(validate(t, *a));
  }
}

TEST(FindBasic, P7MinusCopyCarriesDegreePartition) {
  const auto c = find_basic_copy(pattern(BasicKind::P7Minus));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->kind, BasicKind::P7Minus);
  EXPECT_TRUE(is_homogeneous_pair(pattern(BasicKind::P7Minus), {c->d1.begin(), c->d1.end()},
                                  {c->d2.begin(), c->d2.end()}));
}

TEST(Homogeneous, Sets) {
  const Tournament& p7 = pattern(BasicKind::P7);
  EXPECT_TRUE(is_homogeneous_set(p7, {3}).homogeneous);
  EXPECT_TRUE(is_homogeneous_set(p7, {0, 1, 2, 3, 4, 5, 6}).homogeneous);
  EXPECT_FALSE(is_homogeneous_set(p7, {0, 1}).homogeneous);
  const Tournament s = substitute(test::cyclic3(), 0, pattern(BasicKind::T5)).tournament;
  EXPECT_TRUE(is_homogeneous_set(s, {0, 1, 2, 3, 4}).homogeneous);
  EXPECT_THROW(is_homogeneous_set(p7, {}), PreconditionViolated);
}

TEST(Homogeneous, Pairs) {
  const Tournament& p7 = pattern(BasicKind::P7);
  EXPECT_TRUE(is_homogeneous_pair(p7, {0}, {1}));
  Tournament t(4);
  t.orient(3, 1);  // 1 -> 2 and 3 -> 1: vertex 1 is mixed on {2, 3}
  EXPECT_FALSE(is_homogeneous_pair(t, {0}, {2, 3}));
  EXPECT_THROW(is_homogeneous_pair(p7, {0, 1}, {1}), PreconditionViolated);
}

TEST(Nice, Examples) {
  for (int v = 0; v < 6; ++v) EXPECT_TRUE(is_nice_vertex(Tournament(6), v).nice);
  for (BasicKind k : {BasicKind::T5, BasicKind::P7Minus, BasicKind::P7})
    for (int v = 0; v < basic_size(k); ++v) EXPECT_FALSE(is_nice_vertex(pattern(k), v).nice);
  const auto r = is_nice_vertex(delta122(), 0);
  EXPECT_FALSE(r.nice);
  ASSERT_TRUE(r.witness);
  const auto [x, y1, y2] = *r.witness;
  EXPECT_TRUE(is_cyclic_triangle(delta122(), 0, x, y1));
  EXPECT_TRUE(is_cyclic_triangle(delta122(), 0, x, y2));
}

TEST(Bridge, Examples) {
  // Isolated backedge 2 -> 0 in the ordering (0, 1, 2, 3).
  const Tournament t = test::from_backedges(4, {{0, 2}});
  EXPECT_TRUE(is_bridge(t, 2, 0).bridge);
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v)
      if (u != v && pattern(BasicKind::T5).edge(u, v))
        EXPECT_FALSE(is_bridge(pattern(BasicKind::T5), u, v).bridge);
  const auto b1 = is_bridge(Tournament(3), 0, 2);
  EXPECT_FALSE(b1.bridge);
  EXPECT_EQ(b1.violated, BridgeCondition::B1);
  EXPECT_EQ(b1.witness, std::vector<int>{1});
  EXPECT_THROW(is_bridge(Tournament(3), 2, 0), PreconditionViolated);
}

TEST(Homogeneous, BasicCopiesInFreeSamples) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto [t, tree] = gen_free(test::params(9 + static_cast<int>(seed % 4), seed));
    EXPECT_EQ(run_check("homogeneity", t), "") << seed;
  }
}

}  // namespace
}  // namespace dfree
