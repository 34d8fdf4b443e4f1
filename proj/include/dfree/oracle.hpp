#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dfree/core.hpp"

namespace dfree {

inline constexpr int kChromaticCap = 20;
inline constexpr int kAlphaCap = 24;
inline constexpr int kNuCap = 21;
inline constexpr int kPavingOracleCap = 10;
inline constexpr int kEnumerationCap = 8;

bool oracle_is_free(const Tournament& t);
int oracle_chromatic(const Tournament& t);
int oracle_alpha(const Tournament& t);
int oracle_nu(const Tournament& t);
std::optional<Ordering> oracle_paving_ordering(const Tournament& t);
std::vector<Ordering> oracle_all_paving_orderings(const Tournament& t);
std::int64_t oracle_automorphisms(const Tournament& t);

// Least tournament_from_mask code over all relabelings; n <= 11.
std::uint64_t canonical_mask(const Tournament& t);
// One representative per isomorphism class, each in canonical labeling.
std::vector<Tournament> isomorphism_classes(int n);

// Check names accepted by enumerate_labeled.
const std::vector<std::string>& enumeration_checks();

struct EnumerationFailure {
  std::string check;
  std::string tmt;
  std::string detail;
};

struct EnumerationReport {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t free_count = 0;
  std::uint64_t paving_count = 0;  // free and free of T5, P7-, P7
  std::vector<std::string> checks;
  std::vector<std::uint64_t> checked;  // per check, tournaments it ran on
  std::vector<EnumerationFailure> failures;
};

// report_to_json lists at most this many failures; failure_count covers all.
inline constexpr int kStoredFailures = 20;

EnumerationReport enumerate_labeled(int n, const std::vector<std::string>& checks,
                                    int workers = 1);
std::string report_to_json(const EnumerationReport& r, int indent = 2);

// Runs one named check on t; returns an empty string on success.
std::string run_check(const std::string& name, const Tournament& t);

}  // namespace dfree
