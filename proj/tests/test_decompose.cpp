#include <gtest/gtest.h>

#include "dfree/decompose.hpp"
#include "dfree/oracle.hpp"
#include "support.hpp"

namespace dfree {
namespace {

using Edges = std::vector<std::pair<int, int>>;

DecompositionTree tree_of(const Tournament& t) { return std::get<DecompositionTree>(decompose(t)); }

OrderedGraph by_position(const Tournament& t, const Ordering& o) {
  const auto g = backedge_graph(t, o);
  OrderedGraph r(t.size(), identity_ordering(t.size()));
  for (auto [a, b] : g.edges()) r.add_edge(g.position(a), g.position(b));
  return r;
}

TEST(Decompose, P7) {
  const auto tree = tree_of(pattern(BasicKind::P7));
  EXPECT_EQ(tree.base.size(), 1);
  ASSERT_EQ(tree.steps.size(), 1u);
  EXPECT_EQ(tree.steps[0].op, Step::Op::Substitute);
  EXPECT_EQ(tree.steps[0].kind, BasicKind::P7);
  EXPECT_EQ(reconstruct(tree), pattern(BasicKind::P7));
}

TEST(Decompose, DeltaGivesWitness) {
  const auto d = decompose(delta122());
  ASSERT_TRUE(std::holds_alternative<Delta122Witness>(d));
  EXPECT_TRUE(validate(delta122(), std::get<Delta122Witness>(d)));
}

TEST(Decompose, JoinAtABridge) {
  Tournament base(12);
  base.orient(9, 2);
  ASSERT_TRUE(is_bridge(base, 9, 2).bridge);
  const Tournament t = p7minus_join(base, 9, 2).tournament;
  const auto tree = tree_of(t);
  EXPECT_EQ(tree.base.size(), 12);
  ASSERT_EQ(tree.steps.size(), 1u);
  EXPECT_EQ(tree.steps[0].op, Step::Op::Join);
  EXPECT_EQ(reconstruct(tree), t);
}

TEST(Decompose, Transitive) {
  const auto tree = tree_of(Tournament(8));
  EXPECT_TRUE(tree.steps.empty());
  EXPECT_EQ(natural_ordering(tree), tree.ordering);
  EXPECT_EQ(backedge_count(Tournament(8), tree.ordering), 0);
}

TEST(Decompose, ExhaustiveSmall) {
  for (int n = 1; n <= 6; ++n) {
    const auto r = enumerate_labeled(n, {"freeness", "decompose", "natural", "theorem11"});
    EXPECT_TRUE(r.failures.empty()) << report_to_json(r);
  }
}

TEST(Natural, SingleSubstitutionAddsMinimumBackedges) {
  const std::array<std::pair<BasicKind, int>, 3> cases{
      {{BasicKind::T5, 3}, {BasicKind::P7Minus, 4}, {BasicKind::P7, 7}}};
  for (auto [k, extra] : cases) {
    const Tournament base = test::from_backedges(6, {{0, 2}});
    DecompositionTree tree;
    tree.base = base;
    tree.ordering = identity_ordering(6);
    const auto s = substitute(base, 4, pattern(k));
    Step step{Step::Op::Substitute, 4, -1, k, identity_ordering(s.tournament.size())};
    tree.steps.push_back(step);
    const Tournament t = reconstruct(tree);
    EXPECT_EQ(backedge_count(t, natural_ordering(tree)), 1 + extra) << to_string(k);
  }
}

TEST(Natural, SingleJoinAddsFour) {
  const Tournament base = test::from_backedges(6, {{1, 4}});
  DecompositionTree tree;
  tree.base = base;
  tree.ordering = identity_ordering(6);
  tree.steps.push_back({Step::Op::Join, 4, 1, BasicKind::T5, identity_ordering(10)});
  const Tournament t = reconstruct(tree);
  const Ordering o = natural_ordering(tree);
  EXPECT_EQ(backedge_count(t, o), 5);
  const auto comps = components(backedge_graph(t, o));
  std::vector<std::size_t> sizes;
  for (const auto& c : comps)
    if (c.vertices.size() > 1) sizes.push_back(c.vertices.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 4}));
}

TEST(Natural, LayoutIsolatesSites) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto [t, gen_tree] = gen_free(test::params(10 + static_cast<int>(seed % 60), seed));
    const auto lay = site_layout(tree_of(t));
    EXPECT_TRUE(check_paving(lay.base, lay.base_ordering)) << seed;
    const auto g = backedge_graph(lay.base, lay.base_ordering);
    for (int b = 0; b < lay.base.size(); ++b) {
      if (lay.site[b]) EXPECT_EQ(g.degree(b), 0) << seed;
      if (lay.join_of[b] >= 0) EXPECT_EQ(g.degree(b), 1) << seed;
    }
    for (auto [u, v] : lay.joins) {
      EXPECT_TRUE(g.has_edge(u, v));
      EXPECT_GT(g.position(u), g.position(v));
    }
  }
}

TEST(Classify, Examples) {
  for (const auto& c : classify_components(backedge_graph(Tournament(5), identity_ordering(5))))
    EXPECT_EQ(c.cls, ComponentClass::MonotonePath);

  const auto t5 = theorem11_ordering(pattern(BasicKind::T5));
  ASSERT_EQ(t5.components.size(), 1u);
  EXPECT_EQ(t5.components[0].cls, ComponentClass::H5);
  EXPECT_EQ(by_position(pattern(BasicKind::T5), t5.ordering).edges(),
            (Edges{{0, 2}, {0, 4}, {1, 4}, {2, 3}}));

  const auto p7 = theorem11_ordering(pattern(BasicKind::P7));
  ASSERT_EQ(p7.components.size(), 1u);
  EXPECT_EQ(p7.components[0].cls, ComponentClass::H7);
  EXPECT_EQ(by_position(pattern(BasicKind::P7), p7.ordering).edge_count(), 9);

  const auto p6 = theorem11_ordering(pattern(BasicKind::P7Minus));
  ASSERT_EQ(p6.components.size(), 1u);
  EXPECT_EQ(p6.components[0].cls, ComponentClass::H6);

  EXPECT_EQ(classify_components(h_pattern(6).graph)[0].cls, ComponentClass::H6);
  EXPECT_EQ(classify_components(h_pattern(7).graph)[0].cls, ComponentClass::H7);
  EXPECT_EQ(to_string(ComponentClass::MonotonePath), "monotone-path");
}

TEST(Classify, PavingOrderingsGiveOnlyPaths) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GenParams p;
    p.n_target = 40;
    p.seed = seed;
    p.backedge_density = 0.7;
    const auto [t, o] = gen_paving(p);
    for (const auto& c : classify_components(backedge_graph(t, o)))
      EXPECT_EQ(c.cls, ComponentClass::MonotonePath);
  }
}

TEST(Classify, DeltaControlLooksLikePaths) {
  OrderedGraph g(5, identity_ordering(5));
  for (auto [a, b] : Edges{{0, 2}, {1, 3}, {2, 4}}) g.add_edge(a, b);
  for (const auto& c : classify_components(g)) EXPECT_EQ(c.cls, ComponentClass::MonotonePath);
  EXPECT_FALSE(oracle_is_free(tournament_from_backedges(g)));
}

TEST(Classify, NonMonotonePathIsOther) {
  OrderedGraph g(3, identity_ordering(3));
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  EXPECT_EQ(classify_components(g)[0].cls, ComponentClass::Other);
}

TEST(NormalForm, NotFreeThrows) {
  EXPECT_THROW(theorem11_ordering(delta122()), NotFree);
}

TEST(NormalForm, RandomCorpus) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto [t, gen_tree] = gen_free(test::params(5 + static_cast<int>(seed % 120), seed));
    const auto nf = theorem11_ordering(t);
    ASSERT_TRUE(is_ordering(nf.ordering, t.size()));
    const auto g = backedge_graph(t, nf.ordering);
    for (const auto& c : nf.components) {
      EXPECT_NE(c.cls, ComponentClass::Other) << seed;
      if (c.cls == ComponentClass::H5 || c.cls == ComponentClass::H7) {
        EXPECT_EQ(g.position(c.vertices.back()) - g.position(c.vertices.front()) + 1,
                  static_cast<int>(c.vertices.size()));
      }
    }
  }
}

}  // namespace
}  // namespace dfree
