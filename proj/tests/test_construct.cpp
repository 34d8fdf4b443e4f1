#include <gtest/gtest.h>

#include "dfree/construct.hpp"
#include "dfree/decompose.hpp"
#include "dfree/oracle.hpp"
#include "support.hpp"

namespace dfree {
namespace {

TEST(Substitute, Examples) {
  EXPECT_EQ(substitute(Tournament(1), 0, pattern(BasicKind::T5)).tournament, pattern(BasicKind::T5));
  const Tournament two(2);
  const auto first = substitute(test::cyclic3(), 1, two);
  const auto second = substitute(first.tournament, first.host_map[2], two);
  EXPECT_TRUE(isomorphic(delta122(), second.tournament));
  EXPECT_THROW(substitute(two, 2, two), PreconditionViolated);
}

TEST(Substitute, Layout) {
  const auto s = substitute(Tournament(4), 1, test::cyclic3());
  EXPECT_EQ(s.host_map, (std::vector<int>{0, -1, 4, 5}));
  EXPECT_EQ(s.inner_map, (std::vector<int>{1, 2, 3}));
  EXPECT_TRUE(is_homogeneous_set(s.tournament, {1, 2, 3}).homogeneous);
}

TEST(Substitute, NonNiceVertexBreaksFreeness) {
  for (int v = 0; v < 7; ++v)
    EXPECT_TRUE(find_delta122(substitute(pattern(BasicKind::P7), v, Tournament(2)).tournament));
}

TEST(Join, Examples) {
  const auto j = p7minus_join(Tournament(2), 0, 1);
  EXPECT_EQ(j.tournament, pattern(BasicKind::P7Minus));
  EXPECT_TRUE(is_homogeneous_pair(j.tournament, {j.a1.begin(), j.a1.end()}, {j.a2.begin(), j.a2.end()}));
  EXPECT_THROW(p7minus_join(Tournament(2), 1, 0), PreconditionViolated);
}

TEST(Join, B1ViolationCreatesP7) {
  const auto j = p7minus_join(Tournament(3), 0, 2);
  std::vector<int> x(j.a1.begin(), j.a1.end());
  x.insert(x.end(), j.a2.begin(), j.a2.end());
  x.push_back(j.host_map[1]);
  std::sort(x.begin(), x.end());
  EXPECT_TRUE(match_basic(j.tournament, BasicKind::P7, x));
}

TEST(Join, BridgePreservesFreeness) {
  const Tournament t = test::from_backedges(6, {{0, 2}, {3, 5}});
  for (auto [u, v] : std::vector<std::pair<int, int>>{{2, 0}, {5, 3}}) {
    ASSERT_TRUE(is_bridge(t, u, v).bridge);
    EXPECT_FALSE(find_delta122(p7minus_join(t, u, v).tournament));
  }
}

TEST(Reconstruct, Examples) {
  DecompositionTree empty;
  empty.base = test::cyclic3();
  empty.ordering = {0, 1, 2};
  EXPECT_EQ(reconstruct(empty), test::cyclic3());

  DecompositionTree p7;
  p7.base = Tournament(1);
  p7.ordering = {0};
  p7.steps.push_back({Step::Op::Substitute, 0, -1, BasicKind::P7, {0, 1, 2, 3, 4, 5, 6}});
  EXPECT_EQ(reconstruct(p7), pattern(BasicKind::P7));
}

TEST(Reconstruct, RejectsIllegalSteps) {
  DecompositionTree bad;
  bad.base = pattern(BasicKind::T5);
  bad.ordering = identity_ordering(5);
  bad.steps.push_back({Step::Op::Substitute, 0, -1, BasicKind::T5, identity_ordering(9)});
  EXPECT_THROW(reconstruct(bad), ReplayPreconditionFailed);
  bad.steps[0] = {Step::Op::Join, 0, 1, BasicKind::T5, identity_ordering(9)};
  EXPECT_THROW(reconstruct(bad), ReplayPreconditionFailed);
}

TEST(TreeJson, RoundTripAndSchema) {
  const auto [t, tree] = gen_free(test::params(30, 5));
  const std::string text = tree_to_json(tree);
  const auto back = tree_from_json(text);
  EXPECT_EQ(back.base, tree.base);
  EXPECT_EQ(back.ordering, tree.ordering);
  EXPECT_EQ(reconstruct(back), t);
  const auto j = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"base", "steps"}));
  EXPECT_THROW(tree_from_json("{\"base\": 3}"), ParseError);
}

TEST(GenPaving, Examples) {
  GenParams p;
  p.n_target = 12;
  p.backedge_density = 0;
  const auto [flat, flat_order] = gen_paving(p);
  EXPECT_EQ(backedge_count(flat, flat_order), 0);
  EXPECT_EQ(backedge_count(flat, paving_ordering(flat)), 0);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    p.seed = seed;
    p.backedge_density = 0.5;
    const auto [t, o] = gen_paving(p);
    EXPECT_TRUE(check_paving(t, o));
    EXPECT_FALSE(find_delta122(t));
    EXPECT_EQ(gen_paving(p).first, t);
  }
}

TEST(GenPaving, DeltaIsPavingButNotAGeneratorOutput) {
  const Tournament d = test::from_backedges(5, {{0, 2}, {2, 4}, {1, 3}});
  EXPECT_TRUE(isomorphic(d, delta122()));
  EXPECT_TRUE(check_paving(d, identity_ordering(5)));
  EXPECT_TRUE(find_delta122(d));
}

TEST(GenFree, Examples) {
  GenParams p;
  p.n_target = 25;
  p.subst_weight = 0;
  p.join_weight = 0;
  const auto [t, tree] = gen_free(p);
  EXPECT_TRUE(tree.steps.empty());
  EXPECT_EQ(t, tree.base);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto params = test::params(1 + static_cast<int>(seed % 12), seed);
    const auto [u, tr] = gen_free(params);
    EXPECT_GE(u.size(), params.n_target);
    EXPECT_TRUE(oracle_is_free(u)) << seed;
    EXPECT_EQ(reconstruct(tr), u);
    EXPECT_EQ(gen_free(params).first, u);
  }
  p.n_target = 0;
  EXPECT_THROW(gen_free(p), PreconditionViolated);
}

}  // namespace
}  // namespace dfree
