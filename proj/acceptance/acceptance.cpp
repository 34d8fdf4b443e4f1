#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>

#include "dfree/apps.hpp"
#include "dfree/construct.hpp"
#include "dfree/decompose.hpp"
#include "dfree/oracle.hpp"

using namespace dfree;

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

struct Criterion {
  std::uint64_t checked = 0;
  std::vector<std::string> failures;
  std::uint64_t failed = 0;
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    ++failed;
    if (failures.size() < 5) failures.push_back(what);
  }
};

std::map<int, Criterion> results;

// Maps an enumeration check to the criterion it serves.
int criterion_of(const std::string& check) {
  static const std::map<std::string, int> m{
      {"freeness", 1}, {"decompose", 2}, {"theorem11", 3}, {"coloring", 4},  {"alpha", 5},
      {"natural", 6},  {"packing", 6},   {"homogeneity", 7}, {"operations", 7}, {"paving", 8}};
  return m.at(check);
}

void exhaustive(unsigned workers) {
  for (int n = 1; n <= 7; ++n) {
    const auto r = enumerate_labeled(n, enumeration_checks(), workers);
    for (std::size_t c = 0; c < r.checks.size(); ++c) results[criterion_of(r.checks[c])].checked += r.checked[c];
    for (const auto& f : r.failures)
      results[criterion_of(f.check)].expect(false, "n=" + std::to_string(n) + " " + f.check + ": " + f.detail);
  }
}

void sample_corpus(int samples) {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> size(1, 200);
  for (int i = 0; i < samples; ++i) {
    GenParams p;
    p.n_target = size(rng);
    p.seed = rng();
    p.backedge_density = std::uniform_real_distribution<double>(0.05, 0.9)(rng);
    const std::string tag = "sample n=" + std::to_string(p.n_target) + " seed=" + std::to_string(p.seed);
    try {
      const auto [t, gen_tree] = gen_free(p);
      const auto d = decompose(t);
      if (!std::holds_alternative<DecompositionTree>(d)) {
        results[2].expect(false, tag + ": decompose returned a witness");
        continue;
      }
      const auto& tree = std::get<DecompositionTree>(d);
      results[2].expect(reconstruct(tree) == t, tag + ": round trip");
      const auto nf = normal_form(tree);
      const auto v = normal_form_violation(t, nf);
      results[3].expect(is_ordering(nf.ordering, t.size()) && v.empty(), tag + ": " + v);
      const auto c = color(tree);
      results[4].expect(c.k <= 3 && is_valid_coloring(t, c), tag + ": colouring");
      const auto s = transitive_set(tree);
      results[5].expect(is_transitive_subset(t, s) && static_cast<int>(s.size()) >= ceil_div(3 * t.size(), 7),
                        tag + ": transitive set");
      const auto pk = pack_triangles(tree);
      results[6].expect(is_valid_packing(t, pk.packing) &&
                            static_cast<int>(pk.packing.triangles.size()) >= ceil_div(2 * pk.m, 7) &&
                            pk.m == backedge_count(t, natural_ordering(tree)),
                        tag + ": packing");
    } catch (const std::exception& e) {
      results[2].expect(false, tag + ": " + e.what());
    }
  }
}

void exact_values() {
  const Tournament& p7 = pattern(BasicKind::P7);
  const Tournament& t5 = pattern(BasicKind::T5);
  OrderedGraph g(5, identity_ordering(5));
  g.add_edge(0, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 4);
  bool paths = true;
  for (const auto& c : classify_components(g)) paths = paths && c.cls == ComponentClass::MonotonePath;
  results[3].expect(paths && !oracle_is_free(tournament_from_backedges(g)), "negative control");

  results[4].expect(color(p7).k == 3 && oracle_chromatic(p7) == 3, "chi(P7)");
  results[4].expect(oracle_chromatic(t5) == 2 && is_two_colorable(t5), "chi(T5)");

  Tournament blow(2);
  for (int v = 1; v >= 0; --v) blow = substitute(blow, v, p7).tournament;
  const auto start = std::chrono::steady_clock::now();
  const int alpha = oracle_alpha(blow);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  results[5].expect(static_cast<int>(transitive_set(blow).size()) == 6 && alpha == 6, "blowup alpha");
  results[5].expect(secs <= 1.0, "blowup oracle time");

  const auto pp = pack_triangles(p7);
  results[6].expect(pp.packing.triangles.size() == 2 && pp.m == 7 && oracle_nu(p7) == 2, "nu(P7)");
  const auto pb = pack_triangles(blow);
  results[6].expect(pb.packing.triangles.size() == 4 && oracle_nu(blow) == 4, "blowup nu");
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    GenParams p;
    p.n_target = 1 + static_cast<int>(seed % 150);
    p.seed = seed;
    p.backedge_density = 0.1 + 0.8 * static_cast<double>(seed % 9) / 8;
    const auto [t, o] = gen_paving(p);
    const auto pk = pack_paving(t, o);
    results[6].expect(is_valid_packing(t, pk) &&
                          static_cast<int>(pk.triangles.size()) >= ceil_div(backedge_count(t, o), 3),
                      "pack_paving seed " + std::to_string(seed));
  }
}

void lemma_properties() {
  std::uint64_t tested = 0;
  for (std::uint64_t seed = 0; tested < 1500; ++seed) {
    GenParams p;
    p.n_target = 5 + static_cast<int>(seed % 8);
    p.seed = seed;
    p.backedge_density = 0.1 + 0.2 * static_cast<double>(seed % 4);
    const auto t = gen_free(p).first;
    if (t.size() > 12) continue;
    ++tested;
    for (const auto& check : {"homogeneity", "operations"}) {
      const auto r = run_check(check, t);
      results[7].expect(r.empty(), "gen seed " + std::to_string(seed) + " " + check + ": " + r);
    }
  }
}

void paving_classes() {
  std::mt19937_64 rng(8);
  for (int n = 1; n <= 8; ++n)
    for (const auto& t : isomorphism_classes(n)) {
      if (!oracle_is_free(t)) continue;
      const bool basic_free = !find_basic_copy_by_subsets(t);
      const bool exists = oracle_paving_ordering(t).has_value();
      results[8].expect(exists == basic_free, "existence " + to_tmt(t));
      if (!basic_free) continue;
      for (int k = 0; k < 4; ++k) {
        Ordering to = identity_ordering(n);
        if (k > 0) std::shuffle(to.begin(), to.end(), rng);
        Tournament u(n);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            if (a != b && t.edge(a, b)) u.orient(to[a], to[b]);
        try {
          results[8].expect(check_paving(u, paving_ordering(u)), "paving_ordering " + to_tmt(u));
        } catch (const std::exception& e) {
          results[8].expect(false, to_tmt(u) + e.what());
        }
      }
    }
}

}  // namespace

int main() {
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  exhaustive(workers);
  sample_corpus(10000);
  exact_values();
  lemma_properties();
  paving_classes();
  bool ok = true;
  for (int c = 1; c <= 8; ++c) {
    const auto& r = results[c];
    const bool pass = r.failed == 0 && r.checked > 0;
    ok = ok && pass;
    std::cout << "criterion " << c << ": " << (pass ? "PASS" : "FAIL") << " (" << r.checked
              << " checks, " << r.failed << " failures)\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
  }
  return ok ? 0 : 1;
}
