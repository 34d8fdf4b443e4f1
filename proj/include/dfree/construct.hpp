#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dfree/core.hpp"
#include "dfree/patterns.hpp"

namespace dfree {

struct ReplayPreconditionFailed : Error {
  using Error::Error;
};
struct GenerationExhausted : Error {
  using Error::Error;
};

// Result layout: host vertices before v keep their index, S occupies
// v .. v+|S|-1, later host vertices shift up by |S|-1.
struct Substitution {
  Tournament tournament;
  std::vector<int> host_map;   // host vertex -> new index, -1 for v
  std::vector<int> inner_map;  // S vertex -> new index
};
Substitution substitute(const Tournament& t, int v, const Tournament& s);

// Result layout: host vertices other than u, v in order, then the six
// vertices of pattern(P7Minus). D2 takes u's place (a1) and D1 takes v's (a2).
struct Join {
  Tournament tournament;
  std::array<int, 3> a1{};
  std::array<int, 3> a2{};
  std::vector<int> host_map;   // host vertex -> new index, -1 for u and v
  std::vector<int> inner_map;  // P7Minus vertex -> new index
};
Join p7minus_join(const Tournament& t, int u, int v);

struct Step {
  enum class Op { Substitute, Join };
  Op op = Op::Substitute;
  int at = -1;
  int at2 = -1;  // head of the joined edge
  BasicKind kind = BasicKind::T5;
  // mapping[k] is the index, in the tournament after this step, of vertex k of
  // the layout produced by substitute / p7minus_join.
  std::vector<int> mapping;
};

struct DecompositionTree {
  Tournament base;
  Ordering ordering;
  std::vector<Step> steps;
};

// Applies one step, checking the niceness / bridge precondition.
Tournament apply_step(const Tournament& t, const Step& s);
Tournament reconstruct(const DecompositionTree& tree);

std::string tree_to_json(const DecompositionTree& tree, int indent = -1);
DecompositionTree tree_from_json(const std::string& text);

struct GenParams {
  int n_target = 1;
  double backedge_density = 0.3;
  double subst_weight = 1.0;
  double join_weight = 1.0;
  std::uint64_t seed = 0;
};

inline constexpr int kGenRetryBudget = 1000;

std::pair<Tournament, Ordering> gen_paving(const GenParams& params);
std::pair<Tournament, DecompositionTree> gen_free(const GenParams& params);

}  // namespace dfree
