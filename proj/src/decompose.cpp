#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dfree/decompose.hpp"

namespace dfree {

namespace {

std::vector<int> others(int n, const std::vector<int>& drop) {
  std::vector<char> gone(n, 0);
  for (int v : drop) gone[v] = 1;
  std::vector<int> r;
  for (int v = 0; v < n; ++v)
    if (!gone[v]) r.push_back(v);
  return r;
}

// Shrinks a copy to one vertex (substitution) or one edge (join); returns the
// step that undoes it, in the labels of the smaller tournament.
std::pair<Tournament, Step> collapse(const Tournament& t, const BasicCopy& c) {
  const int n = t.size(), s = basic_size(c.kind);
  Step step;
  step.kind = c.kind;
  const bool join =
      c.kind == BasicKind::P7Minus && !is_homogeneous_set(t, c.vertices).homogeneous;
  if (!join) {
    const int rep = *std::min_element(c.vertices.begin(), c.vertices.end());
    std::vector<int> drop;
    for (int v : c.vertices)
      if (v != rep) drop.push_back(v);
    const auto keep = others(n, drop);
    const int at = static_cast<int>(std::find(keep.begin(), keep.end(), rep) - keep.begin());
    step.op = Step::Op::Substitute;
    step.at = at;
    for (int l = 0; l < n; ++l) {
      if (l < at) step.mapping.push_back(keep[l]);
      else if (l < at + s) step.mapping.push_back(c.vertices[l - at]);
      else step.mapping.push_back(keep[l - s + 1]);
    }
    return {induced(t, keep).tournament, std::move(step)};
  }
  int u = -1, v = -1;
  for (int a : c.d2)
    for (int b : c.d1)
      if (t.edge(a, b) && (u < 0 || std::pair{a, b} < std::pair{u, v})) {
        u = a;
        v = b;
      }
  std::vector<int> drop;
  for (int w : c.vertices)
    if (w != u && w != v) drop.push_back(w);
  const auto keep = others(n, drop);
  auto index = [&](int w) {
    return static_cast<int>(std::find(keep.begin(), keep.end(), w) - keep.begin());
  };
  step.op = Step::Op::Join;
  step.at = index(u);
  step.at2 = index(v);
  for (int w : keep)
    if (w != u && w != v) step.mapping.push_back(w);
  for (int p = 0; p < 6; ++p) step.mapping.push_back(c.vertices[p]);
  return {induced(t, keep).tournament, std::move(step)};
}

}  // namespace

Decomposition decompose(const Tournament& t) {
  if (auto w = find_delta122(t)) return *w;
  Tournament cur = t;
  std::vector<Step> steps;
  while (auto c = find_basic_copy_in_free(cur)) {
    auto [smaller, step] = collapse(cur, *c);
    cur = std::move(smaller);
    steps.push_back(std::move(step));
  }
  std::reverse(steps.begin(), steps.end());
  DecompositionTree tree;
  tree.ordering = paving_ordering(cur);
  tree.base = std::move(cur);
  tree.steps = std::move(steps);
  return tree;
}

namespace {

OrderedGraph positional(const Tournament& t, const Ordering& o) {
  const int n = t.size();
  OrderedGraph g(n, identity_ordering(n));
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (t.edge(o[q], o[p])) g.add_edge(p, q);
  return g;
}

OrderedGraph canonical_backedges() {
  OrderedGraph g(6, identity_ordering(6));
  for (auto [a, b] : {std::pair{1, 3}, {1, 6}, {2, 5}, {3, 4}, {4, 6}}) g.add_edge(a - 1, b - 1);
  return g;
}

struct Tables {
  std::array<Ordering, 3> min;
  std::array<Ordering, 3> h;
  Ordering canonical;
};

const Tables& tables() {
  static const Tables tb = [] {
    Tables r;
    r.min = {Ordering{0, 1, 2, 3, 4}, Ordering{0, 1, 2, 3, 4, 5}, Ordering{0, 1, 2, 3, 4, 5, 6}};
    r.h = {Ordering{0, 1, 3, 2, 4}, Ordering{0, 3, 1, 2, 4, 5}, Ordering{0, 3, 1, 2, 4, 5, 6}};
    r.canonical = {0, 1, 3, 2, 4, 5};
    const std::array kinds{BasicKind::T5, BasicKind::P7Minus, BasicKind::P7};
    const std::array min_edges{3, 4, 7};
    auto first_three_d1 = [](const Ordering& o) {
      std::vector<int> a(o.begin(), o.begin() + 3), d(p7minus_d1().begin(), p7minus_d1().end());
      std::sort(a.begin(), a.end());
      std::sort(d.begin(), d.end());
      return a == d;
    };
    for (int k = 0; k < 3; ++k) {
      const Tournament& p = pattern(kinds[k]);
      if (backedge_count(p, r.min[k]) != min_edges[k] ||
          !isomorphic(h_pattern(p.size()).graph, positional(p, r.h[k])))
        throw std::logic_error("local ordering table is inconsistent");
    }
    if (!isomorphic(canonical_backedges(), positional(pattern(BasicKind::P7Minus), r.canonical)) ||
        !first_three_d1(r.canonical) || !first_three_d1(r.h[1]))
      throw std::logic_error("canonical ordering table is inconsistent");
    return r;
  }();
  return tb;
}

int kind_index(BasicKind k) {
  switch (k) {
    case BasicKind::T5: return 0;
    case BasicKind::P7Minus: return 1;
    case BasicKind::P7: return 2;
  }
  return 0;
}

// Neighbourhood demand on a base vertex: no neighbours at all, or exactly the
// partner, on the given side.
struct Demand {
  int v;
  int partner;
  bool partner_left;
};

inline constexpr int kWindowCap = 8;

// Base ordering under local permutations of at most kWindowCap consecutive
// positions; every accepted permutation keeps the ordering paving.
class BaseOrder {
 public:
  BaseOrder(const Tournament& t, Ordering o) : t_(t), o_(std::move(o)), pos_(positions_of(o_)) {}
  const Ordering& ordering() const { return o_; }
  int pos(int v) const { return pos_[v]; }
  bool adjacent(int a, int b) const { return pos_[a] < pos_[b] ? t_.edge(b, a) : t_.edge(a, b); }
  int degree(int v) const {
    int d = 0;
    for (int w = 0; w < t_.size(); ++w) d += w != v && adjacent(v, w);
    return d;
  }
  bool met(const Demand& d) const {
    if (d.partner < 0) return degree(d.v) == 0;
    return degree(d.v) == 1 && adjacent(d.v, d.partner) &&
           (pos_[d.partner] < pos_[d.v]) == d.partner_left;
  }
  bool repair(const std::vector<Demand>& goal, const std::vector<Demand>& keep) {
    const int n = static_cast<int>(o_.size());
    for (int k = 2; k <= std::min(kWindowCap, n); ++k)
      for (int lo = 0; lo + k <= n; ++lo) {
        const bool covers = std::any_of(goal.begin(), goal.end(), [&](const Demand& d) {
          return pos_[d.v] >= lo && pos_[d.v] < lo + k;
        });
        if (covers && try_window(lo, k, goal, keep)) return true;
      }
    return false;
  }

 private:
  bool try_window(int lo, int k, const std::vector<Demand>& goal, const std::vector<Demand>& keep) {
    const int n = static_cast<int>(o_.size()), hi = lo + k;
    const std::vector<int> old(o_.begin() + lo, o_.begin() + hi);
    std::vector<int> out_l(k, 0), out_r(k, 0);
    for (int x = 0; x < k; ++x) {
      for (int p = 0; p < lo; ++p) out_l[x] += t_.edge(old[x], o_[p]);
      for (int p = hi; p < n; ++p) out_r[x] += t_.edge(o_[p], old[x]);
    }
    std::vector<Demand> check = goal;
    for (const auto& d : keep)
      if (pos_[d.v] >= lo && pos_[d.v] < hi) check.push_back(d);
    std::vector<int> perm(k), l(k), r(k);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
      if (lo > 0 && t_.edge(old[perm[0]], o_[lo - 1])) continue;
      if (hi < n && t_.edge(o_[hi], old[perm[k - 1]])) continue;
      for (int x = 0; x < k; ++x) {
        l[x] = out_l[perm[x]];
        r[x] = out_r[perm[x]];
      }
      bool ok = true;
      for (int y = 1; y < k && ok; ++y)
        for (int x = 0; x < y && ok; ++x) {
          if (!t_.edge(old[perm[y]], old[perm[x]])) continue;
          ok = y != x + 1 && ++l[y] <= 1 && ++r[x] <= 1;
        }
      for (int x = 0; x < k && ok; ++x) ok = l[x] <= 1 && r[x] <= 1;
      if (!ok) continue;
      for (int x = 0; x < k; ++x) {
        o_[lo + x] = old[perm[x]];
        pos_[o_[lo + x]] = lo + x;
      }
      if (std::all_of(check.begin(), check.end(), [&](const Demand& d) { return met(d); })) return true;
    }
    for (int x = 0; x < k; ++x) {
      o_[lo + x] = old[x];
      pos_[old[x]] = lo + x;
    }
    return false;
  }

  const Tournament& t_;
  Ordering o_;
  std::vector<int> pos_;
};

}  // namespace

const Ordering& min_backedge_ordering(BasicKind k) { return tables().min[kind_index(k)]; }
const Ordering& canonical_p7minus_ordering() { return tables().canonical; }
const Ordering& h_ordering(BasicKind k) { return tables().h[kind_index(k)]; }

SiteLayout site_layout(const DecompositionTree& tree) {
  SiteLayout lay;
  const int nb = tree.base.size();
  lay.base = tree.base;
  lay.site.assign(nb, std::nullopt);
  lay.join_of.assign(nb, -1);
  std::array<int, 7> none;
  none.fill(-1);
  lay.role_vertex.assign(nb, none);

  struct Tag {
    int base;
    int role;  // -1 for an untouched base vertex
  };
  std::vector<Tag> tags;
  for (int b = 0; b < nb; ++b) tags.push_back({b, -1});
  auto fresh = [&](const Tag& g) {
    if (g.role >= 0 || lay.site[g.base] || lay.join_of[g.base] >= 0)
      throw NotNormalizable("operation applied inside an earlier expansion");
    return g.base;
  };
  Tournament cur = tree.base;
  for (const auto& s : tree.steps) {
    std::vector<Tag> layout;
    const int n = cur.size();
    if (s.op == Step::Op::Substitute) {
      if (s.at < 0 || s.at >= n) throw ReplayPreconditionFailed("substitution site out of range");
      const int b = fresh(tags[s.at]);
      lay.site[b] = s.kind;
      const int k = basic_size(s.kind);
      for (int l = 0; l < n + k - 1; ++l) {
        if (l < s.at) layout.push_back(tags[l]);
        else if (l < s.at + k) layout.push_back({b, l - s.at});
        else layout.push_back(tags[l - k + 1]);
      }
    } else {
      if (s.at < 0 || s.at >= n || s.at2 < 0 || s.at2 >= n)
        throw ReplayPreconditionFailed("join site out of range");
      const int bu = fresh(tags[s.at]), bv = fresh(tags[s.at2]);
      lay.join_of[bu] = lay.join_of[bv] = static_cast<int>(lay.joins.size());
      lay.joins.emplace_back(bu, bv);
      for (int l = 0; l < n; ++l)
        if (l != s.at && l != s.at2) layout.push_back(tags[l]);
      const auto& d1 = p7minus_d1();
      for (int p = 0; p < 6; ++p) {
        const bool head = std::find(d1.begin(), d1.end(), p) != d1.end();
        layout.push_back({head ? bv : bu, p});
      }
    }
    cur = apply_step(cur, s);
    std::vector<Tag> next(layout.size());
    for (std::size_t l = 0; l < layout.size(); ++l) next[s.mapping[l]] = layout[l];
    tags = std::move(next);
  }
  lay.tournament = std::move(cur);
  for (int f = 0; f < static_cast<int>(tags.size()); ++f)
    lay.role_vertex[tags[f].base][std::max(tags[f].role, 0)] = f;

  if (!check_paving(lay.base, tree.ordering)) throw NotNormalizable("base ordering is not paving");
  BaseOrder order(lay.base, tree.ordering);
  std::vector<Demand> keep;
  auto settle = [&](const std::vector<Demand>& goal, const char* what) {
    for (const auto& d : goal) {
      if (!order.met(d) && !order.repair({d}, keep) && !order.repair(goal, keep))
        throw NotNormalizable(what);
      keep.push_back(d);
    }
  };
  for (int b = 0; b < nb; ++b)
    if (lay.site[b]) settle({{b, -1, false}}, "substitution site cannot be isolated");
  for (auto [u, v] : lay.joins)
    settle({{u, v, true}, {v, u, false}}, "join edge cannot be made an isolated backedge");
  if (!check_paving(lay.base, order.ordering())) throw std::logic_error("normalized base is not paving");
  lay.base_ordering = order.ordering();
  return lay;
}

Ordering expand_layout(const SiteLayout& lay, bool normal_form) {
  const auto& d1 = p7minus_d1();
  auto is_d1 = [&](int p) { return std::find(d1.begin(), d1.end(), p) != d1.end(); };
  Ordering out;
  for (int b : lay.base_ordering) {
    const auto& rv = lay.role_vertex[b];
    if (lay.site[b]) {
      const BasicKind k = *lay.site[b];
      for (int p : normal_form ? h_ordering(k) : min_backedge_ordering(k)) out.push_back(rv[p]);
    } else if (lay.join_of[b] >= 0) {
      const bool head = lay.joins[lay.join_of[b]].second == b;
      const Ordering& local = normal_form ? h_ordering(BasicKind::P7Minus) : canonical_p7minus_ordering();
      for (int p : local)
        if (is_d1(p) == head) out.push_back(rv[p]);
    } else {
      out.push_back(rv[0]);
    }
  }
  return out;
}

Ordering natural_ordering(const DecompositionTree& tree) {
  return expand_layout(site_layout(tree), false);
}

std::string to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::MonotonePath: return "monotone-path";
    case ComponentClass::H5: return "H5";
    case ComponentClass::H6: return "H6";
    case ComponentClass::H7: return "H7";
    case ComponentClass::Other: return "other";
  }
  return "other";
}

std::vector<ClassifiedComponent> classify_components(const OrderedGraph& g) {
  std::vector<ClassifiedComponent> out;
  for (const auto& c : components(g)) {
    ClassifiedComponent cc{c.vertices, ComponentClass::Other};
    const int k = static_cast<int>(c.vertices.size());
    bool path = c.graph.edge_count() == k - 1;
    for (int a = 0; path && a + 1 < k; ++a) path = c.graph.has_edge(a, a + 1);
    auto run_consecutive = [&](int from, int to) {
      for (int a = from; a < to; ++a)
        if (g.position(c.vertices[a + 1]) != g.position(c.vertices[a]) + 1) return false;
      return true;
    };
    if (path) {
      cc.cls = ComponentClass::MonotonePath;
    } else if ((k == 5 || k == 7) && c.consecutive && isomorphic(h_pattern(k).graph, c.graph)) {
      cc.cls = k == 5 ? ComponentClass::H5 : ComponentClass::H7;
    } else if (k == 6 && isomorphic(h_pattern(6).graph, c.graph) && run_consecutive(0, 2) &&
               run_consecutive(3, 5)) {
      cc.cls = ComponentClass::H6;
    }
    out.push_back(std::move(cc));
  }
  return out;
}

NormalForm normal_form(const DecompositionTree& tree) {
  auto lay = site_layout(tree);
  NormalForm nf;
  nf.ordering = expand_layout(lay, true);
  nf.components = classify_components(backedge_graph(lay.tournament, nf.ordering));
  return nf;
}

NormalForm theorem11_ordering(const Tournament& t) {
  auto d = decompose(t);
  if (auto* w = std::get_if<Delta122Witness>(&d)) throw NotFree(*w);
  return normal_form(std::get<DecompositionTree>(d));
}

std::string normal_form_violation(const Tournament& t, const NormalForm& nf) {
  const auto g = backedge_graph(t, nf.ordering);
  const auto again = classify_components(g);
  if (again.size() != nf.components.size()) return "reported components differ from the backedge graph";
  auto span = [&](const std::vector<int>& pos, std::size_t from, std::size_t to) {
    return pos[to - 1] - pos[from] + 1 == static_cast<int>(to - from);
  };
  for (const auto& c : nf.components) {
    if (c.cls == ComponentClass::Other) return "component classified as other";
    std::vector<int> pos;
    for (int v : c.vertices) pos.push_back(g.position(v));
    std::sort(pos.begin(), pos.end());
    if ((c.cls == ComponentClass::H5 || c.cls == ComponentClass::H7) && !span(pos, 0, pos.size()))
      return "H5/H7 component is not consecutive";
    if (c.cls == ComponentClass::H6 && (!span(pos, 0, 3) || !span(pos, 3, 6)))
      return "H6 flock is not consecutive";
  }
  for (std::size_t i = 0; i < again.size(); ++i)
    if (again[i].cls != nf.components[i].cls) return "reported class differs from reclassification";
  return {};
}

}  // namespace dfree
