#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dfree/core.hpp"

namespace dfree {

enum class BasicKind { T5, P7Minus, P7 };

std::string to_string(BasicKind k);
BasicKind basic_kind_from_string(const std::string& s);
int basic_size(BasicKind k);

// T5: i -> j iff (j - i) mod 5 in {1, 2}. P7: (j - i) mod 7 in {1, 2, 4}.
// P7Minus: P7 with its last vertex removed.
const Tournament& pattern(BasicKind k);

// x = 0, Y = {1, 2}, Z = {3, 4}.
const Tournament& delta122();

// Degree partition of pattern(P7Minus): D1 has out-degree 3, D2 out-degree 2.
const std::array<int, 3>& p7minus_d1();
const std::array<int, 3>& p7minus_d2();

struct HPattern {
  OrderedGraph graph;
  std::array<int, 3> flock1{};  // H6 only
  std::array<int, 3> flock2{};
};
const HPattern& h_pattern(int k);

struct Delta122Witness {
  int x = -1;
  std::array<int, 2> y{};
  std::array<int, 2> z{};
  bool operator==(const Delta122Witness&) const = default;
};
bool validate(const Tournament& t, const Delta122Witness& w);
std::string to_string(const Delta122Witness& w);

std::optional<Delta122Witness> find_delta122(const Tournament& t);
// Some copy of Delta(1,2,2) uses w.
bool has_delta122_through(const Tournament& t, int w);

struct BasicCopy {
  BasicKind kind = BasicKind::T5;
  std::vector<int> vertices;  // vertices[i] realizes pattern vertex i
  std::array<int, 3> d1{};    // P7Minus only
  std::array<int, 3> d2{};
};
bool validate(const Tournament& t, const BasicCopy& c);

std::optional<BasicCopy> find_basic_copy(const Tournament& t);
// Realizes pattern(kind) on the given vertex set, if it induces a copy.
std::optional<BasicCopy> match_basic(const Tournament& t, BasicKind kind,
                                     const std::vector<int>& vertices);
// Same as find_basic_copy for a tournament already known to be free.
std::optional<BasicCopy> find_basic_copy_in_free(const Tournament& t);
// Exhaustive subset scan, valid for any tournament.
std::optional<BasicCopy> find_basic_copy_by_subsets(const Tournament& t);

struct Homogeneity {
  bool homogeneous = true;
  std::vector<int> mixed;
};
Homogeneity is_homogeneous_set(const Tournament& t, const std::vector<int>& x);
bool is_homogeneous_pair(const Tournament& t, const std::vector<int>& a1,
                         const std::vector<int>& a2);

struct NiceResult {
  bool nice = true;
  std::optional<std::array<int, 3>> witness;  // (x, y1, y2)
};
NiceResult is_nice_vertex(const Tournament& t, int v);

enum class BridgeCondition { B1, B2, B3 };
struct BridgeResult {
  bool bridge = true;
  std::optional<BridgeCondition> violated;
  std::vector<int> witness;
};
BridgeResult is_bridge(const Tournament& t, int u, int v);

}  // namespace dfree
