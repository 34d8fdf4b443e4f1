#include <gtest/gtest.h>

#include "dfree/decompose.hpp"
#include "dfree/oracle.hpp"
#include "support.hpp"

namespace dfree {
namespace {

TEST(CheckPaving, Examples) {
  EXPECT_TRUE(check_paving(Tournament(6), identity_ordering(6)));
  Ordering o = identity_ordering(5);
  do EXPECT_FALSE(check_paving(pattern(BasicKind::T5), o));
  while (std::next_permutation(o.begin(), o.end()));
  const Tournament d = test::from_backedges(5, {{0, 2}, {2, 4}, {1, 3}});
  EXPECT_TRUE(check_paving(d, identity_ordering(5)));
  EXPECT_FALSE(check_paving(d, {0, 1, 2}));
}

TEST(CheckPaving, DeltaHasExactlyOnePavingOrdering) {
  EXPECT_EQ(oracle_all_paving_orderings(delta122()).size(), 1u);
}

TEST(PavedStatus, Counts) {
  const auto s = paved_status(pattern(BasicKind::T5), identity_ordering(5));
  EXPECT_EQ(s.right[0], 2);
  EXPECT_TRUE(s.nearly_paved(0));
  EXPECT_EQ(s.left[4], 2);
  EXPECT_TRUE(s.paved(2));
}

TEST(EliminateP1, Examples) {
  const Tournament t = test::from_backedges(7, {{0, 2}, {4, 6}});
  EXPECT_EQ(eliminate_p1_violations(t, identity_ordering(7)), identity_ordering(7));
  EXPECT_EQ(eliminate_p1_violations(Tournament(2), {1, 0}), (Ordering{0, 1}));
  const Tournament u = test::from_backedges(4, {{1, 2}, {0, 3}});
  const Ordering r = eliminate_p1_violations(u, identity_ordering(4));
  EXPECT_EQ(backedge_count(u, r), 1);
  EXPECT_TRUE(check_paving(u, r));
  EXPECT_THROW(eliminate_p1_violations(pattern(BasicKind::T5), identity_ordering(5)), P2ViolatedInput);
}

TEST(Reshuffle, IsolatedTriangle) {
  const auto r = reshuffle_triangle(test::cyclic3(), {0, 1, 2}, 0, 1, 2);
  ASSERT_TRUE(r);
  EXPECT_TRUE(check_paving(test::cyclic3(), *r));
  EXPECT_THROW(reshuffle_triangle(Tournament(3), {0, 1, 2}, 0, 1, 2), PreconditionViolated);
  EXPECT_THROW(reshuffle_triangle(test::cyclic3(), {0, 1, 2}, 1, 0, 2), PreconditionViolated);
}

TEST(Reshuffle, P7MinusConfigurationFails) {
  const Tournament& t = pattern(BasicKind::P7Minus);
  const Ordering& eta = canonical_p7minus_ordering();
  EXPECT_FALSE(reshuffle_triangle(t, eta, eta[3], eta[4], eta[5]));
}

// Whenever a reshuffle succeeds it only permutes the window and paves it.
TEST(Reshuffle, PropertyOnSmallClasses) {
  for (int n = 3; n <= 7; ++n)
    for (const auto& t : isomorphism_classes(n))
      for (const auto& s : oracle_all_paving_orderings(t))
        for (int p = 0; p + 2 < n; ++p) {
          if (!is_cyclic_triangle(t, s[p], s[p + 1], s[p + 2])) continue;
          const auto r = reshuffle_triangle(t, s, s[p], s[p + 1], s[p + 2]);
          if (!r) continue;
          const auto st = paved_status(t, *r);
          for (int q = 0; q < n; ++q) {
            if (q < p || q > p + 2) EXPECT_EQ((*r)[q], s[q]);
            else EXPECT_TRUE(st.paved((*r)[q]));
          }
        }
}

TEST(Insert, T5HasNoPavingExtension) {
  const Tournament& t5 = pattern(BasicKind::T5);
  const auto ind = induced(t5, {0, 1, 2, 3});
  for (auto s : oracle_all_paving_orderings(ind.tournament)) {
    for (int& v : s) v = ind.new_to_old[v];
    EXPECT_FALSE(insert_vertex(t5, 4, s));
  }
}

TEST(Insert, SingleInNeighbourGoesFirst) {
  // x = 3 loses only to 1; the rest of the ordering is transitive.
  Tournament t(4);
  t.orient(3, 0);
  t.orient(3, 2);
  const auto r = insert_vertex(t, 3, {0, 1, 2});
  ASSERT_TRUE(r);
  EXPECT_TRUE(check_paving(t, *r));
}

TEST(Insert, RejectsBadOrderings) {
  EXPECT_THROW(insert_vertex(Tournament(3), 0, {1}), PreconditionViolated);
  EXPECT_THROW(insert_vertex(Tournament(3), 0, {0, 1}), PreconditionViolated);
  EXPECT_THROW(insert_vertex(Tournament(3), 5, {0, 1}), PreconditionViolated);
}

TEST(Insert, NotFreeIsReported) {
  const Tournament& d = delta122();
  bool thrown = false;
  for (int x = 0; x < 5 && !thrown; ++x) {
    std::vector<int> rest;
    for (int v = 0; v < 5; ++v)
      if (v != x) rest.push_back(v);
    const auto ind = induced(d, rest);
    for (auto s : oracle_all_paving_orderings(ind.tournament)) {
      for (int& v : s) v = ind.new_to_old[v];
      try {
        if (auto r = insert_vertex(d, x, s)) EXPECT_TRUE(check_paving(d, *r));
      } catch (const NotFree& e) {
        EXPECT_TRUE(validate(d, e.witness));
        thrown = true;
      }
    }
  }
  EXPECT_TRUE(thrown);
}

// Every free, basic-free tournament extends every paving ordering of T - x.
TEST(Insert, SweepOverClasses) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& t : isomorphism_classes(n)) {
      if (!oracle_is_free(t) || find_basic_copy_by_subsets(t)) continue;
      for (int x = 0; x < n; ++x) {
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
          if (v != x) rest.push_back(v);
        const auto ind = induced(t, rest);
        for (auto s : oracle_all_paving_orderings(ind.tournament)) {
          for (int& v : s) v = ind.new_to_old[v];
          const auto r = insert_vertex(t, x, s);
          ASSERT_TRUE(r) << to_tmt(t) << "x=" << x;
          ASSERT_TRUE(check_paving(t, *r));
        }
      }
    }
}

TEST(PavingOrdering, Examples) {
  EXPECT_EQ(backedge_count(Tournament(9), paving_ordering(Tournament(9))), 0);
  EXPECT_THROW(paving_ordering(pattern(BasicKind::T5)), PreconditionViolated);
  EXPECT_THROW(paving_ordering(delta122()), PreconditionViolated);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenParams p;
    p.n_target = 30;
    p.seed = seed;
    p.backedge_density = 0.6;
    const Tournament t = test::shuffled(gen_paving(p).first, seed);
    EXPECT_TRUE(check_paving(t, paving_ordering(t)));
  }
}

TEST(PavingOrdering, ExistenceMatchesOracleOnFreeClasses) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& t : isomorphism_classes(n)) {
      if (!oracle_is_free(t)) continue;
      const bool basic_free = !find_basic_copy_by_subsets(t);
      ASSERT_EQ(oracle_paving_ordering(t).has_value(), basic_free) << to_tmt(t);
      if (basic_free) ASSERT_TRUE(check_paving(t, paving_ordering(t)));
      else EXPECT_THROW(paving_ordering(t), PreconditionViolated);
    }
}

}  // namespace
}  // namespace dfree
