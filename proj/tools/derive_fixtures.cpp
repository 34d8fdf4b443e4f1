// Computes the oracle-derived constants frozen in tests/fixtures/derived.json.
#include <iostream>

#include <json.hpp>

#include "dfree/construct.hpp"
#include "dfree/oracle.hpp"
#include "dfree/patterns.hpp"

using namespace dfree;
using json = nlohmann::ordered_json;

namespace {

Tournament blowup(const Tournament& s, int k) {
  Tournament t(k);
  for (int v = k - 1; v >= 0; --v) t = substitute(t, v, s).tournament;
  return t;
}

std::int64_t orderings_realizing(const Tournament& t, const OrderedGraph& h) {
  Ordering o = identity_ordering(t.size());
  std::int64_t count = 0;
  do {
    const auto g = backedge_graph(t, o);
    bool same = g.edge_count() == h.edge_count();
    for (auto [a, b] : h.edges())
      same = same && g.has_edge(o[a], o[b]);
    count += same;
  } while (std::next_permutation(o.begin(), o.end()));
  return count;
}

int min_backedges(const Tournament& t) {
  Ordering o = identity_ordering(t.size());
  int best = t.size() * t.size();
  do best = std::min(best, backedge_count(t, o));
  while (std::next_permutation(o.begin(), o.end()));
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int max_labeled = argc > 1 ? std::atoi(argv[1]) : 7;
  json j;
  j["command"] = "build/derive_fixtures " + std::to_string(max_labeled) + " > tests/fixtures/derived.json";

  json labeled = json::object(), paving = json::object();
  for (int n = 1; n <= max_labeled; ++n) {
    const auto r = enumerate_labeled(n, {});
    labeled[std::to_string(n)] = r.free_count;
    paving[std::to_string(n)] = r.paving_count;
  }
  j["labeled_free"] = labeled;
  j["labeled_paving"] = paving;

  json classes = json::object(), free_classes = json::object(), paving_classes = json::object();
  for (int n = 1; n <= kEnumerationCap; ++n) {
    const auto cs = isomorphism_classes(n);
    int f = 0, p = 0;
    for (const auto& t : cs) {
      if (!oracle_is_free(t)) continue;
      ++f;
      p += oracle_paving_ordering(t).has_value();
    }
    classes[std::to_string(n)] = cs.size();
    free_classes[std::to_string(n)] = f;
    paving_classes[std::to_string(n)] = p;
  }
  j["classes"] = classes;
  j["free_classes"] = free_classes;
  j["paving_classes"] = paving_classes;

  const std::vector<std::pair<std::string, Tournament>> named{
      {"Delta122", delta122()},
      {"T5", pattern(BasicKind::T5)},
      {"P7minus", pattern(BasicKind::P7Minus)},
      {"P7", pattern(BasicKind::P7)}};
  for (const auto& [name, t] : named) {
    j["automorphisms"][name] = oracle_automorphisms(t);
    j["chromatic"][name] = oracle_chromatic(t);
    j["alpha"][name] = oracle_alpha(t);
    j["nu"][name] = oracle_nu(t);
    j["paving_orderings"][name] = oracle_all_paving_orderings(t).size();
    j["min_backedges"][name] = min_backedges(t);
  }
  j["h_orderings"]["T5"] = orderings_realizing(pattern(BasicKind::T5), h_pattern(5).graph);
  j["h_orderings"]["P7minus"] = orderings_realizing(pattern(BasicKind::P7Minus), h_pattern(6).graph);
  j["h_orderings"]["P7"] = orderings_realizing(pattern(BasicKind::P7), h_pattern(7).graph);

  const Tournament b = blowup(pattern(BasicKind::P7), 2);
  j["p7_blowup2"] = {{"n", b.size()},
                     {"alpha", oracle_alpha(b)},
                     {"nu", oracle_nu(b)},
                     {"chromatic", oracle_chromatic(b)}};
  std::cout << j.dump(2) << "\n";
}
