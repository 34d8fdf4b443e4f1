#pragma once

#include <fstream>
#include <random>
#include <string>

#include <json.hpp>

#include "dfree/construct.hpp"
#include "dfree/core.hpp"
#include "dfree/patterns.hpp"

namespace dfree::test {

inline Tournament cyclic3() { return tournament_from_matrix(std::vector<std::string>{"010", "001", "100"}); }

inline Tournament relabel(const Tournament& t, const std::vector<int>& to) {
  Tournament r(t.size());
  for (int a = 0; a < t.size(); ++a)
    for (int b = 0; b < t.size(); ++b)
      if (a != b && t.edge(a, b)) r.orient(to[a], to[b]);
  return r;
}

inline Tournament shuffled(const Tournament& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Ordering to = identity_ordering(t.size());
  std::shuffle(to.begin(), to.end(), rng);
  return relabel(t, to);
}

// Substitutes s for every vertex of the transitive k-tournament.
inline Tournament blowup(const Tournament& s, int k) {
  Tournament t(k);
  for (int v = k - 1; v >= 0; --v) t = substitute(t, v, s).tournament;
  return t;
}

inline Tournament from_backedges(int n, const std::vector<std::pair<int, int>>& edges) {
  OrderedGraph g(n, identity_ordering(n));
  for (auto [a, b] : edges) g.add_edge(a, b);
  return tournament_from_backedges(g);
}

inline const nlohmann::json& fixtures() {
  static const nlohmann::json j = [] {
    std::ifstream f(DFREE_FIXTURES);
    return nlohmann::json::parse(f);
  }();
  return j;
}

inline GenParams params(int n, std::uint64_t seed) {
  GenParams p;
  p.n_target = n;
  p.seed = seed;
  p.backedge_density = 0.1 + 0.2 * static_cast<double>(seed % 4);
  return p;
}

}  // namespace dfree::test
