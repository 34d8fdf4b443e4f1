#include "dfree/apps.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace dfree {

namespace {

void check_tables() {
  static const bool ok = [] {
    const auto& g = h_pattern(7).graph;
    const auto& c = h7_coloring();
    for (auto [a, b] : g.edges())
      if (c[a] == c[b]) return false;
    const auto& s = h7_independent_set();
    for (int a : s)
      for (int b : s)
        if (a != b && g.has_edge(a, b)) return false;
    return true;
  }();
  if (!ok) throw std::logic_error("H7 tables are inconsistent");
}

struct Shaped {
  Tournament t;
  NormalForm nf;
};

Shaped shape(const DecompositionTree& tree) {
  auto lay = site_layout(tree);
  Shaped s{std::move(lay.tournament), {}};
  s.nf.ordering = expand_layout(lay, true);
  s.nf.components = classify_components(backedge_graph(s.t, s.nf.ordering));
  return s;
}

DecompositionTree require_tree(const Tournament& t) {
  auto d = decompose(t);
  if (auto* w = std::get_if<Delta122Witness>(&d)) throw NotFree(*w);
  return std::get<DecompositionTree>(std::move(d));
}

// Proper colouring of every component: the H7 table, otherwise a BFS
// bipartition from the earliest vertex.
std::vector<int> component_colours(const OrderedGraph& g, const std::vector<ClassifiedComponent>& cs) {
  check_tables();
  std::vector<int> col(g.size(), -1);
  for (const auto& c : cs) {
    if (c.cls == ComponentClass::H7) {
      for (int p = 0; p < 7; ++p) col[c.vertices[p]] = h7_coloring()[p];
      continue;
    }
    std::deque<int> q{c.vertices.front()};
    col[c.vertices.front()] = 0;
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      const auto& nb = g.neighbours(v);
      for (int w = nb.first(); w >= 0; w = nb.next(w)) {
        if (col[w] < 0) {
          col[w] = 1 - col[v];
          q.push_back(w);
        } else if (col[w] == col[v]) {
          throw std::logic_error("backedge component is not bipartite");
        }
      }
    }
  }
  return col;
}

bool cyclic(const Tournament& t, const Triangle& x) { return is_cyclic_triangle(t, x[0], x[1], x[2]); }

void best_small(const Tournament& t, std::vector<int>& left, std::vector<Triangle>& cur,
                std::vector<Triangle>& best) {
  if (cur.size() > best.size()) best = cur;
  if (cur.size() + left.size() / 3 <= best.size() || left.size() < 3) return;
  const int a = left.front();
  std::vector<int> rest(left.begin() + 1, left.end());
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      if (!is_cyclic_triangle(t, a, rest[i], rest[j])) continue;
      std::vector<int> next;
      for (std::size_t k = 0; k < rest.size(); ++k)
        if (k != i && k != j) next.push_back(rest[k]);
      cur.push_back({a, rest[i], rest[j]});
      best_small(t, next, cur, best);
      cur.pop_back();
    }
  best_small(t, rest, cur, best);
}

std::vector<Triangle> small_packing(const Tournament& t, std::vector<int> vs) {
  std::vector<Triangle> cur, best;
  best_small(t, vs, cur, best);
  return best;
}

}  // namespace

const std::array<int, 7>& h7_coloring() {
  static const std::array<int, 7> c{0, 1, 0, 0, 1, 1, 2};
  return c;
}

const std::array<int, 3>& h7_independent_set() {
  static const std::array<int, 3> s{0, 2, 3};
  return s;
}

bool is_valid_coloring(const Tournament& t, const Coloring& c) {
  if (static_cast<int>(c.color.size()) != t.size()) return false;
  std::vector<std::vector<int>> classes(std::max(c.k, 0));
  for (int v = 0; v < t.size(); ++v) {
    if (c.color[v] < 0 || c.color[v] >= c.k) return false;
    classes[c.color[v]].push_back(v);
  }
  for (const auto& cl : classes)
    if (!is_transitive_subset(t, cl)) return false;
  return true;
}

bool is_valid_packing(const Tournament& t, const TrianglePacking& p) {
  std::vector<char> used(t.size(), 0);
  for (const auto& x : p.triangles) {
    for (int v : x) {
      if (v < 0 || v >= t.size() || used[v]) return false;
      used[v] = 1;
    }
    if (!cyclic(t, x)) return false;
  }
  return true;
}

Coloring color(const Tournament& t) { return color(require_tree(t)); }

Coloring color(const DecompositionTree& tree) {
  const auto [t, nf] = shape(tree);
  const auto g = backedge_graph(t, nf.ordering);
  Coloring c;
  c.color = component_colours(g, nf.components);
  c.k = t.size() == 0 ? 0 : *std::max_element(c.color.begin(), c.color.end()) + 1;
  if (!is_valid_coloring(t, c)) throw std::logic_error("colour class is not transitive");
  return c;
}

bool is_two_colorable(const Tournament& t) {
  for (const auto& s : require_tree(t).steps)
    if (s.op == Step::Op::Substitute && s.kind == BasicKind::P7) return false;
  return true;
}

std::vector<int> transitive_set(const Tournament& t) { return transitive_set(require_tree(t)); }

std::vector<int> transitive_set(const DecompositionTree& tree) {
  const auto [t, nf] = shape(tree);
  const auto g = backedge_graph(t, nf.ordering);
  const auto col = component_colours(g, nf.components);
  std::vector<int> out;
  for (const auto& c : nf.components) {
    if (c.cls == ComponentClass::H7) {
      for (int p : h7_independent_set()) out.push_back(c.vertices[p]);
      continue;
    }
    std::array<std::vector<int>, 2> side;
    for (int v : c.vertices) side[col[v]].push_back(v);
    const auto& pick = side[0].size() >= side[1].size() ? side[0] : side[1];
    out.insert(out.end(), pick.begin(), pick.end());
  }
  std::sort(out.begin(), out.end());
  if (!is_transitive_subset(t, out)) throw std::logic_error("stable set is not transitive");
  return out;
}

TrianglePacking pack_paving(const Tournament& t, const Ordering& sigma) {
  if (!check_paving(t, sigma)) throw NotPavingOrdering("ordering is not a paving ordering");
  int free_state = -1;
  auto is_free = [&] {
    if (free_state < 0) free_state = find_delta122(t) ? 0 : 1;
    return free_state == 1;
  };
  auto p1_holds = [&](const Ordering& s) {
    for (std::size_t p = 0; p + 1 < s.size(); ++p)
      if (t.edge(s[p + 1], s[p])) return false;
    return true;
  };
  TrianglePacking out;
  Ordering cur = sigma;
  while (!cur.empty()) {
    const int n = static_cast<int>(cur.size());
    int i = -1;
    for (int q = 1; q < n && i < 0; ++q)
      if (t.edge(cur[q], cur[0])) i = q;
    if (i < 0) {
      cur.erase(cur.begin());
      continue;
    }
    auto without = [&](int a, int b, int c) {
      Ordering r;
      for (int q = 0; q < n; ++q)
        if (q != a && q != b && q != c) r.push_back(cur[q]);
      return r;
    };
    Ordering rest = without(0, 1, i);
    if (p1_holds(rest)) {
      out.triangles.push_back({cur[0], cur[1], cur[i]});
    } else {
      for (int q = i + 1; q < n; ++q)
        if (t.edge(cur[q], cur[i]) && is_free())
          throw std::logic_error("packing recursion met a right neighbour in a free tournament");
      out.triangles.push_back({cur[0], cur[i - 1], cur[i]});
      rest = without(0, i - 1, i);
      if (!p1_holds(rest)) throw std::logic_error("packing recursion left the ordering unpaved");
    }
    cur = std::move(rest);
  }
  return out;
}

PackResult pack_triangles(const DecompositionTree& tree) {
  const auto lay = site_layout(tree);
  PackResult r;
  r.m = backedge_count(lay.tournament, expand_layout(lay, false));

  std::vector<int> rest;
  for (int b : lay.base_ordering)
    if (lay.join_of[b] < 0) rest.push_back(b);
  std::vector<int> sorted = rest;
  std::sort(sorted.begin(), sorted.end());
  const auto ind = induced(lay.base, sorted);
  Ordering local;
  for (int b : rest) local.push_back(ind.old_to_new[b]);
  local = eliminate_p1_violations(ind.tournament, local);
  const auto base_pack = pack_paving(ind.tournament, local);

  auto members = [&](int b) {
    std::vector<int> x;
    for (int p = 0; p < basic_size(*lay.site[b]); ++p) x.push_back(lay.role_vertex[b][p]);
    return x;
  };
  std::vector<int> hit(lay.base.size(), -1);  // index of the base triangle using a site
  for (const auto& tri : base_pack.triangles) {
    Triangle f;
    for (int k = 0; k < 3; ++k) {
      const int b = ind.new_to_old[tri[k]];
      if (lay.site[b]) hit[b] = static_cast<int>(r.packing.triangles.size());
      f[k] = lay.role_vertex[b][0];
    }
    r.packing.triangles.push_back(f);
  }
  for (int b = 0; b < lay.base.size(); ++b) {
    if (!lay.site[b]) continue;
    const auto x = members(b);
    if (hit[b] < 0) {
      for (const auto& tri : small_packing(lay.tournament, x)) r.packing.triangles.push_back(tri);
      continue;
    }
    std::vector<Triangle> best;
    int spare = -1;
    for (int w : x) {
      std::vector<int> y;
      for (int u : x)
        if (u != w) y.push_back(u);
      auto p = small_packing(lay.tournament, y);
      if (spare < 0 || p.size() > best.size()) {
        best = std::move(p);
        spare = w;
      }
    }
    for (int& v : r.packing.triangles[hit[b]])
      if (v == lay.role_vertex[b][0]) v = spare;
    r.packing.triangles.insert(r.packing.triangles.end(), best.begin(), best.end());
  }
  for (auto [u, v] : lay.joins) {
    std::vector<int> x;
    for (int p = 0; p < 6; ++p) x.push_back(lay.role_vertex[lay.role_vertex[u][p] >= 0 ? u : v][p]);
    for (const auto& tri : small_packing(lay.tournament, x)) r.packing.triangles.push_back(tri);
  }
  if (!is_valid_packing(lay.tournament, r.packing))
    throw std::logic_error("assembled packing is invalid");
  if (7 * static_cast<int>(r.packing.triangles.size()) < 2 * r.m)
    throw std::logic_error("assembled packing is below 2m/7");
  return r;
}

PackResult pack_triangles(const Tournament& t) { return pack_triangles(require_tree(t)); }

}  // namespace dfree
