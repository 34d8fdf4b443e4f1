#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dfree/construct.hpp"
#include "dfree/core.hpp"
#include "dfree/patterns.hpp"

namespace dfree {

struct NotFree : Error {
  explicit NotFree(const Delta122Witness& w)
      : Error("tournament contains Delta(1,2,2): " + to_string(w)), witness(w) {}
  Delta122Witness witness;
};
struct P2ViolatedInput : Error {
  using Error::Error;
};
struct NotNormalizable : Error {
  using Error::Error;
};

// Counts are indexed by vertex.
struct PavedStatus {
  std::vector<int> left;
  std::vector<int> right;
  bool paved(int v) const { return left[v] <= 1 && right[v] <= 1; }
  bool nearly_paved(int v) const {
    return (left[v] == 2 && right[v] <= 1) || (left[v] <= 1 && right[v] == 2);
  }
};
PavedStatus paved_status(const Tournament& t, const Ordering& sigma);

bool check_paving(const Tournament& t, const Ordering& sigma);
Ordering eliminate_p1_violations(const Tournament& t, const Ordering& sigma);
std::optional<Ordering> reshuffle_triangle(const Tournament& t, const Ordering& sigma, int a,
                                           int b, int c);
// sigma orders every vertex of t except x.
std::optional<Ordering> insert_vertex(const Tournament& t, int x, const Ordering& sigma);
Ordering paving_ordering(const Tournament& t);

using Decomposition = std::variant<DecompositionTree, Delta122Witness>;
Decomposition decompose(const Tournament& t);

// Fixed local orderings, as pattern labels.
const Ordering& min_backedge_ordering(BasicKind k);
const Ordering& canonical_p7minus_ordering();
const Ordering& h_ordering(BasicKind k);  // realizes H5, H6, H7 for T5, P7Minus, P7

// The base ordering after the swaps that make substitution sites isolated and
// join edges isolated backedges, together with where every final vertex sits.
struct SiteLayout {
  Tournament tournament;  // reconstruct(tree)
  Tournament base;
  Ordering base_ordering;
  std::vector<std::optional<BasicKind>> site;  // per base vertex
  std::vector<std::pair<int, int>> joins;      // (tail, head) in base labels
  std::vector<int> join_of;                    // per base vertex, index into joins or -1
  // For a plain base vertex: role_vertex[b][0]. For a site or join endpoint:
  // role_vertex[b][p] is the final vertex realizing pattern label p, else -1.
  std::vector<std::array<int, 7>> role_vertex;
};
SiteLayout site_layout(const DecompositionTree& tree);

Ordering natural_ordering(const DecompositionTree& tree);
Ordering expand_layout(const SiteLayout& layout, bool normal_form);

enum class ComponentClass { MonotonePath, H5, H6, H7, Other };
std::string to_string(ComponentClass c);

struct ClassifiedComponent {
  std::vector<int> vertices;  // sorted by position
  ComponentClass cls = ComponentClass::Other;
};
std::vector<ClassifiedComponent> classify_components(const OrderedGraph& g);

struct NormalForm {
  Ordering ordering;
  std::vector<ClassifiedComponent> components;
};
// Throws NotFree on input containing Delta(1,2,2).
NormalForm theorem11_ordering(const Tournament& t);
NormalForm normal_form(const DecompositionTree& tree);
// Empty when the classification and its consecutiveness conditions hold.
std::string normal_form_violation(const Tournament& t, const NormalForm& nf);

}  // namespace dfree
