#pragma once

#include <array>
#include <vector>

#include "dfree/core.hpp"
#include "dfree/decompose.hpp"

namespace dfree {

struct NotPavingOrdering : Error {
  using Error::Error;
};

struct Coloring {
  std::vector<int> color;
  int k = 0;
};
bool is_valid_coloring(const Tournament& t, const Coloring& c);

using Triangle = std::array<int, 3>;
struct TrianglePacking {
  std::vector<Triangle> triangles;
};
bool is_valid_packing(const Tournament& t, const TrianglePacking& p);

// All of these throw NotFree on input containing Delta(1,2,2).
Coloring color(const Tournament& t);
bool is_two_colorable(const Tournament& t);
std::vector<int> transitive_set(const Tournament& t);
// The tree overloads colour reconstruct(tree) without decomposing again.
Coloring color(const DecompositionTree& tree);
std::vector<int> transitive_set(const DecompositionTree& tree);

TrianglePacking pack_paving(const Tournament& t, const Ordering& sigma);

struct PackResult {
  TrianglePacking packing;
  int m = 0;  // backedges of the natural ordering
};
PackResult pack_triangles(const Tournament& t);
PackResult pack_triangles(const DecompositionTree& tree);

// Fixed tables on the H7 ordering, by position.
const std::array<int, 7>& h7_coloring();
const std::array<int, 3>& h7_independent_set();

}  // namespace dfree
