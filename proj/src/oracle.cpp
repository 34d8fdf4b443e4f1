#include "dfree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "dfree/apps.hpp"
#include "dfree/construct.hpp"
#include "dfree/decompose.hpp"
#include "dfree/patterns.hpp"

namespace dfree {

namespace {

void cap(const Tournament& t, int limit, const char* what) {
  if (t.size() > limit)
    throw SizeLimitExceeded(std::string(what) + " is limited to " + std::to_string(limit) +
                            " vertices");
}

std::vector<std::uint32_t> out_masks(const Tournament& t) {
  std::vector<std::uint32_t> m(t.size(), 0);
  for (int a = 0; a < t.size(); ++a)
    for (int b = 0; b < t.size(); ++b)
      if (a != b && t.edge(a, b)) m[a] |= std::uint32_t{1} << b;
  return m;
}

// Adding v to the transitive set s keeps it transitive.
bool fits(const std::vector<std::uint32_t>& out, std::uint32_t s, int v) {
  const std::uint32_t full = s;
  std::uint32_t beaten = out[v] & full;
  const std::uint32_t beats = full & ~out[v];
  for (; beaten; beaten &= beaten - 1) {
    const int a = std::countr_zero(beaten);
    if (out[a] & beats) return false;
  }
  return true;
}

}  // namespace

bool oracle_is_free(const Tournament& t) {
  const int n = t.size();
  std::array<int, 5> s{};
  std::function<bool(int, int)> rec = [&](int start, int depth) {
    if (depth == 5) {
      for (int xi = 0; xi < 5; ++xi) {
        std::array<int, 4> r{};
        int c = 0;
        for (int q = 0; q < 5; ++q)
          if (q != xi) r[c++] = s[q];
        for (int a = 0; a < 4; ++a)
          for (int b = a + 1; b < 4; ++b) {
            std::array<int, 2> y{r[a], r[b]}, z{};
            int zc = 0;
            for (int q = 0; q < 4; ++q)
              if (q != a && q != b) z[zc++] = r[q];
            bool hit = true;
            for (int yy : y) hit = hit && t.edge(s[xi], yy);
            for (int zz : z) hit = hit && t.edge(zz, s[xi]);
            for (int yy : y)
              for (int zz : z) hit = hit && t.edge(yy, zz);
            if (hit) return true;
          }
      }
      return false;
    }
    for (int v = start; v < n; ++v) {
      s[depth] = v;
      if (rec(v + 1, depth + 1)) return true;
    }
    return false;
  };
  return !rec(0, 0);
}

int oracle_chromatic(const Tournament& t) {
  cap(t, kChromaticCap, "oracle_chromatic");
  const int n = t.size();
  if (n == 0) return 0;
  const auto out = out_masks(t);
  for (int k = 1;; ++k) {
    std::vector<std::uint32_t> cls(k, 0);
    std::function<bool(int, int)> rec = [&](int v, int used) {
      if (v == n) return true;
      for (int c = 0; c < std::min(used + 1, k); ++c) {
        if (!fits(out, cls[c], v)) continue;
        cls[c] |= std::uint32_t{1} << v;
        const bool ok = rec(v + 1, std::max(used, c + 1));
        cls[c] &= ~(std::uint32_t{1} << v);
        if (ok) return true;
      }
      return false;
    };
    if (rec(0, 0)) return k;
  }
}

int oracle_alpha(const Tournament& t) {
  cap(t, kAlphaCap, "oracle_alpha");
  const int n = t.size();
  const auto out = out_masks(t);
  int best = 0;
  std::function<void(int, std::uint32_t, int)> rec = [&](int v, std::uint32_t s, int size) {
    best = std::max(best, size);
    if (v == n || size + (n - v) <= best) return;
    if (fits(out, s, v)) rec(v + 1, s | (std::uint32_t{1} << v), size + 1);
    rec(v + 1, s, size);
  };
  rec(0, 0, 0);
  return best;
}

int oracle_nu(const Tournament& t) {
  cap(t, kNuCap, "oracle_nu");
  const int n = t.size();
  const auto out = out_masks(t);
  int best = 0;
  std::function<void(std::uint32_t, int)> rec = [&](std::uint32_t left, int size) {
    best = std::max(best, size);
    if (size + std::popcount(left) / 3 <= best || std::popcount(left) < 3) return;
    const int a = std::countr_zero(left);
    const std::uint32_t rest = left & ~(std::uint32_t{1} << a);
    for (std::uint32_t bs = out[a] & rest; bs; bs &= bs - 1) {
      const int b = std::countr_zero(bs);
      for (std::uint32_t cs = out[b] & rest & ~out[a]; cs; cs &= cs - 1) {
        const int c = std::countr_zero(cs);
        rec(rest & ~(std::uint32_t{1} << b) & ~(std::uint32_t{1} << c), size + 1);
      }
    }
    rec(rest, size);
  };
  rec(n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1), 0);
  return best;
}

namespace {

// Position-by-position search; stop returns true to end the search.
void paving_search(const Tournament& t, const std::function<bool(const Ordering&)>& stop) {
  const int n = t.size();
  Ordering s;
  std::vector<char> used(n, 0);
  std::vector<int> right(n, 0);
  std::function<bool()> rec = [&]() {
    if (static_cast<int>(s.size()) == n) return stop(s);
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      if (!s.empty() && t.edge(w, s.back())) continue;
      std::vector<int> back;
      for (int u : s)
        if (t.edge(w, u)) back.push_back(u);
      if (back.size() > 1) continue;
      if (!back.empty() && right[back[0]] > 0) continue;
      for (int u : back) ++right[u];
      used[w] = 1;
      s.push_back(w);
      const bool done = rec();
      s.pop_back();
      used[w] = 0;
      for (int u : back) --right[u];
      if (done) return true;
    }
    return false;
  };
  rec();
}

}  // namespace

std::optional<Ordering> oracle_paving_ordering(const Tournament& t) {
  cap(t, kPavingOracleCap, "oracle_paving_ordering");
  std::optional<Ordering> r;
  paving_search(t, [&](const Ordering& s) {
    r = s;
    return true;
  });
  return r;
}

std::vector<Ordering> oracle_all_paving_orderings(const Tournament& t) {
  cap(t, kPavingOracleCap, "oracle_all_paving_orderings");
  std::vector<Ordering> r;
  paving_search(t, [&](const Ordering& s) {
    r.push_back(s);
    return false;
  });
  return r;
}

std::int64_t oracle_automorphisms(const Tournament& t) {
  cap(t, kPavingOracleCap, "oracle_automorphisms");
  const int n = t.size();
  Ordering p = identity_ordering(n);
  std::int64_t count = 0;
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b) ok = t.edge(a, b) == t.edge(p[a], p[b]);
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

std::uint64_t canonical_mask(const Tournament& t) {
  const int n = t.size();
  if (n > 11) throw SizeLimitExceeded("canonical_mask is limited to 11 vertices");
  std::vector<std::int64_t> key(n);
  for (int v = 0; v < n; ++v) {
    key[v] = std::int64_t{t.out_degree(v)} << 32;
    for (int w = 0; w < n; ++w)
      if (w != v && t.edge(v, w)) key[v] += t.out_degree(w);
  }
  Ordering order = identity_ordering(n);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
  std::vector<std::pair<int, int>> blocks;
  for (int a = 0; a < n;) {
    int b = a;
    while (b < n && key[order[b]] == key[order[a]]) ++b;
    blocks.emplace_back(a, b);
    a = b;
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == blocks.size()) {
      std::uint64_t m = 0;
      int bit = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
          if (t.edge(order[j], order[i])) m |= std::uint64_t{1} << bit;
      best = std::min(best, m);
      return;
    }
    auto [a, b] = blocks[k];
    std::sort(order.begin() + a, order.begin() + b);
    do rec(k + 1);
    while (std::next_permutation(order.begin() + a, order.begin() + b));
  };
  rec(0);
  return n < 2 ? 0 : best;
}

std::vector<Tournament> isomorphism_classes(int n) {
  if (n < 1 || n > kEnumerationCap)
    throw SizeLimitExceeded("isomorphism classes are limited to 1 <= n <= " +
                            std::to_string(kEnumerationCap));
  std::vector<std::uint64_t> codes{0};
  for (int m = 2; m <= n; ++m) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t c : codes) {
      const Tournament s = tournament_from_mask(m - 1, c);
      for (std::uint64_t ext = 0; ext < (std::uint64_t{1} << (m - 1)); ++ext) {
        Tournament t(m);
        for (int a = 0; a < m - 1; ++a)
          for (int b = a + 1; b < m - 1; ++b)
            if (s.edge(b, a)) t.orient(b, a);
        for (int a = 0; a < m - 1; ++a)
          if ((ext >> a) & 1) t.orient(m - 1, a);
        next.push_back(canonical_mask(t));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    codes = std::move(next);
  }
  std::vector<Tournament> out;
  for (std::uint64_t c : codes) out.push_back(tournament_from_mask(n, c));
  return out;
}

const std::vector<std::string>& enumeration_checks() {
  static const std::vector<std::string> c{"freeness", "decompose", "theorem11", "natural",
                                          "coloring", "alpha",     "packing",   "homogeneity",
                                          "operations", "paving"};
  return c;
}

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::string check_freeness(const Tournament& t, bool free) {
  const auto w = find_delta122(t);
  if (free == w.has_value()) return "find_delta122 disagrees with the oracle";
  if (w && !validate(t, *w)) return "witness does not validate";
  const auto d = decompose(t);
  if (free != std::holds_alternative<DecompositionTree>(d)) return "decompose disagrees with the oracle";
  if (auto* dw = std::get_if<Delta122Witness>(&d); dw && !validate(t, *dw))
    return "decompose witness does not validate";
  return {};
}

std::string check_decompose(const Tournament& t) {
  const auto tree = std::get<DecompositionTree>(decompose(t));
  if (!(reconstruct(tree) == t)) return "reconstruct differs from input";
  if (!check_paving(tree.base, tree.ordering)) return "base ordering is not paving";
  if (find_basic_copy_by_subsets(tree.base)) return "base contains a basic tournament";
  if (!(tree_from_json(tree_to_json(tree)).base == tree.base)) return "tree JSON round trip failed";
  return {};
}

std::string check_theorem11(const Tournament& t) {
  const auto nf = theorem11_ordering(t);
  if (!is_ordering(nf.ordering, t.size())) return "not an ordering";
  return normal_form_violation(t, nf);
}

std::string check_natural(const Tournament& t) {
  const auto tree = std::get<DecompositionTree>(decompose(t));
  const auto lay = site_layout(tree);
  const auto order = expand_layout(lay, false);
  int expect = backedge_count(lay.base, lay.base_ordering) + 4 * static_cast<int>(lay.joins.size());
  for (const auto& s : lay.site)
    if (s) expect += backedge_count(pattern(*s), min_backedge_ordering(*s));
  if (backedge_count(t, order) != expect) return "natural ordering backedge count mismatch";
  if (!(lay.tournament == t)) return "layout tournament differs";
  return {};
}

std::string check_coloring(const Tournament& t) {
  const auto c = color(t);
  if (!is_valid_coloring(t, c) || c.k > 3) return "invalid colouring";
  const int chi = oracle_chromatic(t);
  if (c.k < chi) return "colouring beats the oracle";
  if (is_two_colorable(t) != (chi <= 2)) return "two-colourability disagrees with the oracle";
  return {};
}

std::string check_alpha(const Tournament& t) {
  const auto s = transitive_set(t);
  if (!is_transitive_subset(t, s)) return "set is not transitive";
  if (static_cast<int>(s.size()) < ceil_div(3 * t.size(), 7)) return "below 3n/7";
  if (static_cast<int>(s.size()) > oracle_alpha(t)) return "exceeds the oracle";
  return {};
}

std::string check_packing(const Tournament& t) {
  const auto r = pack_triangles(t);
  if (!is_valid_packing(t, r.packing)) return "invalid packing";
  const int size = static_cast<int>(r.packing.triangles.size());
  if (size < ceil_div(2 * r.m, 7)) return "below 2m/7";
  if (size > oracle_nu(t)) return "exceeds the oracle";
  if (find_basic_copy_by_subsets(t)) return {};
  const auto sigma = paving_ordering(t);
  const auto p = pack_paving(t, sigma);
  if (!is_valid_packing(t, p)) return "invalid paving packing";
  if (static_cast<int>(p.triangles.size()) < ceil_div(backedge_count(t, sigma), 3)) return "paving packing below m/3";
  return {};
}

bool nested(const Tournament& t, const std::vector<int>& pair) {
  VertexSet in(t.size(), pair);
  for (int w = 0; w < t.size(); ++w) {
    if (in.test(w)) continue;
    auto x = pair;
    x.push_back(w);
    std::sort(x.begin(), x.end());
    if (match_basic(t, BasicKind::P7, x)) return true;
  }
  return false;
}

std::string check_homogeneity(const Tournament& t) {
  const int n = t.size();
  for (BasicKind k : {BasicKind::T5, BasicKind::P7Minus, BasicKind::P7}) {
    const int s = basic_size(k);
    if (s > n) continue;
    std::vector<int> pick(s);
    std::function<std::string(int, int)> rec = [&](int start, int depth) -> std::string {
      if (depth == s) {
        auto c = match_basic(t, k, pick);
        if (!c) return {};
        if (k != BasicKind::P7Minus) {
          if (!is_homogeneous_set(t, pick).homogeneous) return to_string(k) + " copy is not homogeneous";
          return {};
        }
        if (!is_homogeneous_pair(t, {c->d1.begin(), c->d1.end()}, {c->d2.begin(), c->d2.end()}))
          return "P7minus degree partition is not a homogeneous pair";
        return {};
      }
      for (int v = start; v < n; ++v) {
        pick[depth] = v;
        if (auto e = rec(v + 1, depth + 1); !e.empty()) return e;
      }
      return {};
    };
    if (auto e = rec(0, 0); !e.empty()) return e;
  }
  return {};
}

std::string check_operations(const Tournament& t) {
  const Tournament two(2);
  for (int v = 0; v < t.size(); ++v) {
    const bool nice = is_nice_vertex(t, v).nice;
    if (nice != !find_delta122(substitute(t, v, two).tournament))
      return "substitution at vertex " + std::to_string(v) + " disagrees with niceness";
  }
  for (int u = 0; u < t.size(); ++u)
    for (int v = 0; v < t.size(); ++v) {
      if (u == v || !t.edge(u, v)) continue;
      const auto j = p7minus_join(t, u, v);
      std::vector<int> pair(j.a1.begin(), j.a1.end());
      pair.insert(pair.end(), j.a2.begin(), j.a2.end());
      const bool good = !find_delta122(j.tournament) && !nested(j.tournament, pair);
      if (good != is_bridge(t, u, v).bridge)
        return "join at " + std::to_string(u) + "->" + std::to_string(v) + " disagrees with bridge";
    }
  return {};
}

std::string check_paving_agreement(const Tournament& t) {
  const bool basic_free = !find_basic_copy_by_subsets(t);
  const bool exists = oracle_paving_ordering(t).has_value();
  if (basic_free != exists) return "basic-freeness disagrees with paving existence";
  if (basic_free && !check_paving(t, paving_ordering(t))) return "paving_ordering output is not paving";
  return {};
}

}  // namespace

std::string run_check(const std::string& name, const Tournament& t) {
  const bool free = oracle_is_free(t);
  try {
    if (name == "freeness") return check_freeness(t, free);
    if (!free) return {};
    if (name == "decompose") return check_decompose(t);
    if (name == "theorem11") return check_theorem11(t);
    if (name == "natural") return check_natural(t);
    if (name == "coloring") return check_coloring(t);
    if (name == "alpha") return check_alpha(t);
    if (name == "packing") return check_packing(t);
    if (name == "homogeneity") return check_homogeneity(t);
    if (name == "operations") return check_operations(t);
    if (name == "paving") return check_paving_agreement(t);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
  throw PreconditionViolated("unknown check '" + name + "'");
}

EnumerationReport enumerate_labeled(int n, const std::vector<std::string>& checks, int workers) {
  if (n < 0 || n > kEnumerationCap)
    throw SizeLimitExceeded("enumeration is limited to n <= " + std::to_string(kEnumerationCap));
  if (workers < 1) throw PreconditionViolated("workers must be at least 1");
  for (const auto& c : checks)
    if (std::find(enumeration_checks().begin(), enumeration_checks().end(), c) ==
        enumeration_checks().end())
      throw PreconditionViolated("unknown check '" + c + "'");
  const int bits = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << bits;
  std::vector<EnumerationReport> parts(workers);
  auto work = [&](int w) {
    auto& r = parts[w];
    r.checked.assign(checks.size(), 0);
    const std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      const Tournament t = tournament_from_mask(n, mask);
      const bool free = oracle_is_free(t);
      r.free_count += free;
      if (free && !find_basic_copy_by_subsets(t)) ++r.paving_count;
      for (std::size_t c = 0; c < checks.size(); ++c) {
        if (checks[c] != "freeness" && !free) continue;
        ++r.checked[c];
        auto e = run_check(checks[c], t);
        if (e.empty()) continue;
        r.failures.push_back({checks[c], to_tmt(t), e});
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& th : pool) th.join();
  EnumerationReport r;
  r.n = n;
  r.total = total;
  r.checks = checks;
  r.checked.assign(checks.size(), 0);
  for (const auto& p : parts) {
    r.free_count += p.free_count;
    r.paving_count += p.paving_count;
    for (std::size_t c = 0; c < checks.size(); ++c) r.checked[c] += p.checked[c];
    r.failures.insert(r.failures.end(), p.failures.begin(), p.failures.end());
  }
  return r;
}

std::string report_to_json(const EnumerationReport& r, int indent) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["total"] = r.total;
  j["free_count"] = r.free_count;
  j["paving_count"] = r.paving_count;
  j["checks"] = nlohmann::ordered_json::object();
  for (std::size_t c = 0; c < r.checks.size(); ++c) j["checks"][r.checks[c]] = r.checked[c];
  j["failure_count"] = r.failures.size();
  j["failures"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < r.failures.size() && k < kStoredFailures; ++k)
    j["failures"].push_back(
        {{"check", r.failures[k].check}, {"detail", r.failures[k].detail}, {"tmt", r.failures[k].tmt}});
  return j.dump(indent);
}

}  // namespace dfree
