#include <gtest/gtest.h>

#include "dfree/decompose.hpp"
#include "dfree/oracle.hpp"
#include "support.hpp"

namespace dfree {
namespace {

using test::fixtures;

TEST(OracleFree, Examples) {
  EXPECT_FALSE(oracle_is_free(delta122()));
  EXPECT_TRUE(oracle_is_free(pattern(BasicKind::P7)));
  EXPECT_TRUE(oracle_is_free(Tournament(9)));
}

TEST(OracleNumbers, Examples) {
  EXPECT_EQ(oracle_chromatic(Tournament(6)), 1);
  EXPECT_EQ(oracle_chromatic(pattern(BasicKind::P7)), 3);
  EXPECT_EQ(oracle_alpha(Tournament(6)), 6);
  EXPECT_EQ(oracle_alpha(pattern(BasicKind::P7)), 3);
  EXPECT_EQ(oracle_nu(Tournament(6)), 0);
  EXPECT_EQ(oracle_nu(pattern(BasicKind::P7)), 2);
  EXPECT_EQ(oracle_nu(delta122()), 1);
  EXPECT_EQ(oracle_chromatic(Tournament(0)), 0);
}

TEST(OracleNumbers, MatchFixtures) {
  const std::vector<std::pair<std::string, Tournament>> named{
      {"Delta122", delta122()},
      {"T5", pattern(BasicKind::T5)},
      {"P7minus", pattern(BasicKind::P7Minus)},
      {"P7", pattern(BasicKind::P7)}};
  for (const auto& [name, t] : named) {
    EXPECT_EQ(oracle_automorphisms(t), fixtures()["automorphisms"][name].get<int>()) << name;
    EXPECT_EQ(oracle_chromatic(t), fixtures()["chromatic"][name].get<int>()) << name;
    EXPECT_EQ(oracle_alpha(t), fixtures()["alpha"][name].get<int>()) << name;
    EXPECT_EQ(oracle_nu(t), fixtures()["nu"][name].get<int>()) << name;
  }
  const Tournament b = test::blowup(pattern(BasicKind::P7), 2);
  EXPECT_EQ(oracle_alpha(b), fixtures()["p7_blowup2"]["alpha"].get<int>());
  EXPECT_EQ(oracle_nu(b), fixtures()["p7_blowup2"]["nu"].get<int>());
}

TEST(OracleNumbers, Caps) {
  EXPECT_THROW(oracle_chromatic(Tournament(kChromaticCap + 1)), SizeLimitExceeded);
  EXPECT_THROW(oracle_alpha(Tournament(kAlphaCap + 1)), SizeLimitExceeded);
  EXPECT_THROW(oracle_nu(Tournament(kNuCap + 1)), SizeLimitExceeded);
  EXPECT_THROW(oracle_paving_ordering(Tournament(kPavingOracleCap + 1)), SizeLimitExceeded);
  EXPECT_THROW(enumerate_labeled(kEnumerationCap + 1, {}), SizeLimitExceeded);
}

TEST(OraclePaving, Examples) {
  EXPECT_FALSE(oracle_paving_ordering(pattern(BasicKind::T5)));
  const auto d = oracle_paving_ordering(delta122());
  ASSERT_TRUE(d);
  EXPECT_TRUE(check_paving(delta122(), *d));
  EXPECT_EQ(oracle_paving_ordering(Tournament(6)), identity_ordering(6));
}

TEST(Canonical, InvariantUnderRelabeling) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Tournament t = tournament_from_mask(7, seed * 2654435761u % (1u << 21));
    EXPECT_EQ(canonical_mask(t), canonical_mask(test::shuffled(t, seed)));
  }
  EXPECT_NE(canonical_mask(pattern(BasicKind::T5)), canonical_mask(delta122()));
}

TEST(Classes, CountsMatchFixtures) {
  for (int n = 1; n <= kEnumerationCap; ++n)
    EXPECT_EQ(isomorphism_classes(n).size(), fixtures()["classes"][std::to_string(n)].get<std::size_t>());
}

TEST(Enumerate, SmallCounts) {
  const auto r3 = enumerate_labeled(3, enumeration_checks());
  EXPECT_EQ(r3.total, 8u);
  EXPECT_EQ(r3.free_count, 8u);
  EXPECT_TRUE(r3.failures.empty());
  for (int n = 1; n <= 6; ++n) {
    const auto r = enumerate_labeled(n, {}, 3);
    EXPECT_EQ(r.free_count, fixtures()["labeled_free"][std::to_string(n)].get<std::uint64_t>());
    EXPECT_EQ(r.paving_count, fixtures()["labeled_paving"][std::to_string(n)].get<std::uint64_t>());
  }
}

TEST(Enumerate, FiveVertexCountIsDeltaCopies) {
  const auto aut = fixtures()["automorphisms"]["Delta122"].get<int>();
  EXPECT_EQ(enumerate_labeled(5, {}).free_count, 1024u - 120u / aut);
}

TEST(Enumerate, WorkersAgree) {
  const auto a = enumerate_labeled(6, {"freeness", "coloring"}, 1);
  const auto b = enumerate_labeled(6, {"freeness", "coloring"}, 4);
  EXPECT_EQ(report_to_json(a), report_to_json(b));
}

TEST(Enumerate, RejectsBadInput) {
  EXPECT_THROW(enumerate_labeled(4, {"nonsense"}), PreconditionViolated);
  EXPECT_THROW(enumerate_labeled(4, {}, 0), PreconditionViolated);
  EXPECT_THROW(run_check("nonsense", Tournament(3)), PreconditionViolated);
}

TEST(Enumerate, ReportJson) {
  const auto j = nlohmann::json::parse(report_to_json(enumerate_labeled(4, {"freeness"})));
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["total"], 64);
  EXPECT_EQ(j["checks"]["freeness"], 64);
  EXPECT_EQ(j["failure_count"], 0);
}

TEST(Enumerate, FailuresAreReported) {
  EnumerationReport r;
  r.n = 5;
  r.failures.push_back({"freeness", to_tmt(delta122()), "made up"});
  const auto j = nlohmann::json::parse(report_to_json(r));
  EXPECT_EQ(j["failure_count"], 1);
  EXPECT_EQ(j["failures"][0]["detail"], "made up");
}

}  // namespace
}  // namespace dfree
