#include "dfree/patterns.hpp"

#include <algorithm>
#include <bit>

namespace dfree {

std::string to_string(BasicKind k) {
  switch (k) {
    case BasicKind::T5: return "T5";
    case BasicKind::P7Minus: return "P7minus";
    case BasicKind::P7: return "P7";
  }
  return "?";
}

BasicKind basic_kind_from_string(const std::string& s) {
  if (s == "T5") return BasicKind::T5;
  if (s == "P7minus") return BasicKind::P7Minus;
  if (s == "P7") return BasicKind::P7;
  throw PreconditionViolated("unknown basic kind '" + s + "'");
}

int basic_size(BasicKind k) {
  switch (k) {
    case BasicKind::T5: return 5;
    case BasicKind::P7Minus: return 6;
    case BasicKind::P7: return 7;
  }
  return 0;
}

namespace {

Tournament circulant(int n, std::vector<int> residues) {
  Tournament t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j &&
          std::find(residues.begin(), residues.end(), ((j - i) % n + n) % n) !=
              residues.end())
        t.orient(i, j);
  return t;
}

struct Partition {
  std::array<int, 3> d1{}, d2{};
};

Partition p7minus_partition() {
  const Tournament& t = pattern(BasicKind::P7Minus);
  Partition p;
  int a = 0, b = 0;
  for (int v = 0; v < 6; ++v) {
    int d = t.out_degree(v);
    if (d == 3) p.d1.at(a++) = v;
    else if (d == 2) p.d2.at(b++) = v;
  }
  return p;
}

HPattern make_h(int k) {
  HPattern h;
  h.graph = OrderedGraph(k, identity_ordering(k));
  std::vector<std::pair<int, int>> e;
  if (k == 5) {
    e = {{1, 3}, {1, 5}, {2, 5}, {3, 4}};
  } else {
    e = {{1, 2}, {1, 6}, {2, 3}, {2, 4}, {3, 5}, {4, 6}};
    if (k == 7) e.insert(e.end(), {{1, 7}, {2, 7}, {3, 7}});
    h.flock1 = {0, 1, 2};
    h.flock2 = {3, 4, 5};
  }
  for (auto [a, b] : e) h.graph.add_edge(a - 1, b - 1);
  return h;
}

// Smallest two members of the intersection of three rows, or false.
bool two_in(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c,
            int words, int& z1, int& z2) {
  int found = 0;
  for (int k = 0; k < words && found < 2; ++k) {
    std::uint64_t x = a[k] & b[k] & c[k];
    while (x && found < 2) {
      int bit = k * 64 + std::countr_zero(x);
      (found == 0 ? z1 : z2) = bit;
      ++found;
      x &= x - 1;
    }
  }
  return found == 2;
}

int count_and(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c,
              int words) {
  int s = 0;
  for (int k = 0; k < words; ++k) s += std::popcount(a[k] & b[k] & c[k]);
  return s;
}

}  // namespace

const Tournament& pattern(BasicKind k) {
  static const Tournament t5 = circulant(5, {1, 2});
  static const Tournament p7 = circulant(7, {1, 2, 4});
  static const Tournament p7m = induced(p7, {0, 1, 2, 3, 4, 5}).tournament;
  switch (k) {
    case BasicKind::T5: return t5;
    case BasicKind::P7Minus: return p7m;
    case BasicKind::P7: return p7;
  }
  return t5;
}

const Tournament& delta122() {
  static const Tournament d = [] {
    Tournament t(5);
    t.orient(3, 0);
    t.orient(4, 0);
    return t;
  }();
  return d;
}

const std::array<int, 3>& p7minus_d1() {
  static const Partition p = p7minus_partition();
  return p.d1;
}

const std::array<int, 3>& p7minus_d2() {
  static const Partition p = p7minus_partition();
  return p.d2;
}

const HPattern& h_pattern(int k) {
  static const HPattern h5 = make_h(5), h6 = make_h(6), h7 = make_h(7);
  if (k == 5) return h5;
  if (k == 6) return h6;
  if (k == 7) return h7;
  throw PreconditionViolated("h_pattern takes 5, 6 or 7");
}

bool validate(const Tournament& t, const Delta122Witness& w) {
  const int n = t.size();
  std::array<int, 5> v{w.x, w.y[0], w.y[1], w.z[0], w.z[1]};
  for (int a : v)
    if (a < 0 || a >= n) return false;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (v[i] == v[j]) return false;
  for (int y : w.y) {
    if (!t.edge(w.x, y)) return false;
    for (int z : w.z)
      if (!t.edge(y, z)) return false;
  }
  for (int z : w.z)
    if (!t.edge(z, w.x)) return false;
  return true;
}

std::string to_string(const Delta122Witness& w) {
  return "x=" + std::to_string(w.x) + " Y={" + std::to_string(w.y[0]) + "," +
         std::to_string(w.y[1]) + "} Z={" + std::to_string(w.z[0]) + "," +
         std::to_string(w.z[1]) + "}";
}

std::optional<Delta122Witness> find_delta122(const Tournament& t) {
  const int n = t.size(), words = t.words();
  for (int x = 0; x < n; ++x) {
    const std::uint64_t* ox = t.out_row(x);
    const std::uint64_t* ix = t.in_row(x);
    std::vector<int> ys;
    for (int k = 0; k < words; ++k)
      for (std::uint64_t m = ox[k]; m; m &= m - 1)
        ys.push_back(k * 64 + std::countr_zero(m));
    for (std::size_t a = 0; a < ys.size(); ++a)
      for (std::size_t b = a + 1; b < ys.size(); ++b) {
        int z1, z2;
        if (two_in(t.out_row(ys[a]), t.out_row(ys[b]), ix, words, z1, z2))
          return Delta122Witness{x, {ys[a], ys[b]}, {z1, z2}};
      }
  }
  return std::nullopt;
}

bool has_delta122_through(const Tournament& t, int w) {
  const int n = t.size(), words = t.words();
  auto members = [&](const std::uint64_t* row) {
    std::vector<int> out;
    for (int k = 0; k < words; ++k)
      for (std::uint64_t m = row[k]; m; m &= m - 1) out.push_back(k * 64 + std::countr_zero(m));
    return out;
  };
  (void)n;
  // w in the x role
  {
    auto ys = members(t.out_row(w));
    for (std::size_t a = 0; a < ys.size(); ++a)
      for (std::size_t b = a + 1; b < ys.size(); ++b)
        if (count_and(t.out_row(ys[a]), t.out_row(ys[b]), t.in_row(w), words) >= 2)
          return true;
  }
  // w in a y role
  for (int x : members(t.in_row(w)))
    for (int y : members(t.out_row(x)))
      if (y != w && count_and(t.out_row(w), t.out_row(y), t.in_row(x), words) >= 2)
        return true;
  // w in a z role
  for (int x : members(t.out_row(w)))
    for (int z : members(t.in_row(x)))
      if (z != w && count_and(t.out_row(x), t.in_row(w), t.in_row(z), words) >= 2)
        return true;
  return false;
}

bool validate(const Tournament& t, const BasicCopy& c) {
  const Tournament& p = pattern(c.kind);
  if (static_cast<int>(c.vertices.size()) != p.size()) return false;
  std::vector<char> seen(t.size(), 0);
  for (int v : c.vertices) {
    if (v < 0 || v >= t.size() || seen[v]) return false;
    seen[v] = 1;
  }
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (a != b && p.edge(a, b) != t.edge(c.vertices[a], c.vertices[b])) return false;
  if (c.kind == BasicKind::P7Minus) {
    for (int k = 0; k < 3; ++k)
      if (c.d1[k] != c.vertices[p7minus_d1()[k]] || c.d2[k] != c.vertices[p7minus_d2()[k]])
        return false;
  }
  return true;
}

std::optional<BasicCopy> match_basic(const Tournament& t, BasicKind kind,
                                     const std::vector<int>& vertices) {
  if (static_cast<int>(vertices.size()) != basic_size(kind)) return std::nullopt;
  auto sub = induced(t, vertices);
  auto iso = isomorphic(pattern(kind), sub.tournament);
  if (!iso) return std::nullopt;
  BasicCopy c;
  c.kind = kind;
  for (int i : *iso) c.vertices.push_back(vertices[i]);
  if (kind == BasicKind::P7Minus)
    for (int k = 0; k < 3; ++k) {
      c.d1[k] = c.vertices[p7minus_d1()[k]];
      c.d2[k] = c.vertices[p7minus_d2()[k]];
    }
  return c;
}

namespace {

// Score sequence of T[s] sorted ascending must equal `want`.
bool scores_match(const Tournament& t, const std::vector<int>& s,
                  const std::vector<int>& want) {
  std::vector<int> d;
  d.reserve(s.size());
  for (int a : s) {
    int c = 0;
    for (int b : s)
      if (a != b && t.edge(a, b)) ++c;
    d.push_back(c);
  }
  std::sort(d.begin(), d.end());
  return d == want;
}

std::optional<BasicCopy> scan_kind(const Tournament& t, BasicKind kind) {
  const int n = t.size(), k = basic_size(kind);
  if (n < k) return std::nullopt;
  std::vector<int> want;
  for (int v = 0; v < k; ++v) want.push_back(pattern(kind).out_degree(v));
  std::sort(want.begin(), want.end());
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  while (true) {
    if (scores_match(t, s, want))
      if (auto c = match_basic(t, kind, s)) return c;
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return std::nullopt;
}

// Smallest module containing {a, b}; empty if it exceeds `cap` vertices.
std::vector<int> module_closure(const Tournament& t, int a, int b, int cap) {
  const int words = t.words();
  thread_local std::vector<std::uint64_t> in_m, out_u, in_u;
  thread_local std::vector<int> members;
  in_m.assign(words, 0);
  out_u.assign(words, 0);
  in_u.assign(words, 0);
  members.clear();
  auto add = [&](int v) {
    members.push_back(v);
    in_m[v >> 6] |= std::uint64_t{1} << (v & 63);
    const auto* o = t.out_row(v);
    const auto* i = t.in_row(v);
    for (int k = 0; k < words; ++k) {
      out_u[k] |= i[k];  // vertices with an out-neighbour in the module
      in_u[k] |= o[k];   // vertices with an in-neighbour in the module
    }
  };
  add(a);
  add(b);
  while (true) {
    int next = -1;
    for (int k = 0; k < words && next < 0; ++k) {
      std::uint64_t m = out_u[k] & in_u[k] & ~in_m[k];
      if (m) next = k * 64 + std::countr_zero(m);
    }
    if (next < 0) break;
    if (static_cast<int>(members.size()) == cap) return {};
    add(next);
  }
  std::vector<int> r = members;
  std::sort(r.begin(), r.end());
  return r;
}

std::optional<BasicCopy> structural_search(const Tournament& t) {
  const int n = t.size(), words = t.words();
  std::optional<std::vector<int>> best7, best5;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      auto m = module_closure(t, a, b, 7);
      if (m.size() == 7 && (!best7 || m < *best7) && match_basic(t, BasicKind::P7, m))
        best7 = m;
      if (m.size() == 5 && (!best5 || m < *best5) && match_basic(t, BasicKind::T5, m))
        best5 = m;
    }
  if (best7) return match_basic(t, BasicKind::P7, *best7);
  if (best5) return match_basic(t, BasicKind::T5, *best5);
  std::optional<std::vector<int>> best6;
  std::vector<std::uint64_t> c(words), u_out(words), u_in(words);
  for (int a = 0; a < n; ++a) {
    const auto* oa = t.out_row(a);
    const auto* ia = t.in_row(a);
    for (int bk = 0; bk < words; ++bk)
      for (std::uint64_t bm = oa[bk]; bm; bm &= bm - 1) {
        const int b = bk * 64 + std::countr_zero(bm);
        if (b < a) continue;
        const auto* ob = t.out_row(b);
        for (int k = 0; k < words; ++k) c[k] = ob[k] & ia[k];
        for (int ck = 0; ck < words; ++ck)
          for (std::uint64_t cm = c[ck]; cm; cm &= cm - 1) {
            const int cc = ck * 64 + std::countr_zero(cm);
            if (cc < a) continue;
            const auto* oc = t.out_row(cc);
            const auto* ib = t.in_row(b);
            const auto* ic = t.in_row(cc);
            int cnt = 0;
            for (int k = 0; k < words; ++k) {
              u_out[k] = (oa[k] | ob[k] | oc[k]) & (ia[k] | ib[k] | ic[k]);
              cnt += std::popcount(u_out[k]);
            }
            // u_out still contains a, b, c themselves
            if (cnt != 6) continue;
            std::vector<int> s;
            for (int k = 0; k < words; ++k)
              for (std::uint64_t m = u_out[k]; m; m &= m - 1)
                s.push_back(k * 64 + std::countr_zero(m));
            if (best6 && s >= *best6) continue;
            if (match_basic(t, BasicKind::P7Minus, s)) best6 = s;
          }
      }
  }
  if (best6) return match_basic(t, BasicKind::P7Minus, *best6);
  return std::nullopt;
}

}  // namespace

std::optional<BasicCopy> find_basic_copy_by_subsets(const Tournament& t) {
  for (BasicKind k : {BasicKind::P7, BasicKind::T5, BasicKind::P7Minus})
    if (auto c = scan_kind(t, k)) return c;
  return std::nullopt;
}

std::optional<BasicCopy> find_basic_copy(const Tournament& t) {
  // Modules and degree partitions locate every copy once T is free; other
  // inputs fall back to the exhaustive scan.
  if (t.size() <= 12 || find_delta122(t)) return find_basic_copy_by_subsets(t);
  return structural_search(t);
}

std::optional<BasicCopy> find_basic_copy_in_free(const Tournament& t) {
  if (t.size() <= 12) return find_basic_copy_by_subsets(t);
  return structural_search(t);
}

Homogeneity is_homogeneous_set(const Tournament& t, const std::vector<int>& x) {
  if (x.empty()) throw PreconditionViolated("empty vertex set");
  VertexSet in_x(t.size(), x), has_out(t.size()), has_in(t.size());
  for (int v : x) {
    has_out |= t.in(v);
    has_in |= t.out(v);
  }
  Homogeneity h;
  h.mixed = ((has_out & has_in) - in_x).members();
  h.homogeneous = h.mixed.empty();
  return h;
}

bool is_homogeneous_pair(const Tournament& t, const std::vector<int>& a1,
                         const std::vector<int>& a2) {
  if (a1.empty() || a2.empty()) throw PreconditionViolated("empty part");
  VertexSet s1(t.size(), a1), s2(t.size(), a2);
  if (!(s1 & s2).empty()) throw PreconditionViolated("parts overlap");
  for (int v : is_homogeneous_set(t, a1).mixed)
    if (!s2.test(v)) return false;
  for (int v : is_homogeneous_set(t, a2).mixed)
    if (!s1.test(v)) return false;
  return true;
}

NiceResult is_nice_vertex(const Tournament& t, int v) {
  const int words = t.words();
  for (int x = 0; x < t.size(); ++x) {
    if (x == v) continue;
    // cyclic v -> x -> y -> v, or x -> v -> y -> x
    const std::uint64_t* r1 = t.edge(v, x) ? t.out_row(x) : t.in_row(x);
    const std::uint64_t* r2 = t.edge(v, x) ? t.in_row(v) : t.out_row(v);
    int y1, y2;
    if (two_in(r1, r2, r2, words, y1, y2)) return {false, std::array<int, 3>{x, y1, y2}};
  }
  return {};
}

BridgeResult is_bridge(const Tournament& t, int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= t.size() || v >= t.size() || !t.edge(u, v))
    throw PreconditionViolated("not an edge");
  const VertexSet X = t.in(u) & t.in(v), Y = t.in(u) & t.out(v),
                  Z = t.out(u) & t.out(v), W = t.out(u) & t.in(v);
  BridgeResult r;
  if (!W.empty()) return {false, BridgeCondition::B1, {W.first()}};
  const std::array<std::pair<VertexSet, VertexSet>, 2> pq{
      std::pair{X, Y | Z}, std::pair{X | Y, Z}};
  // First two members of row & q, or fewer.
  auto two = [&](const std::uint64_t* row, const VertexSet& q) {
    std::vector<int> m;
    for (int k = 0; k < q.words() && m.size() < 2; ++k)
      for (std::uint64_t w = row[k] & q.data()[k]; w && m.size() < 2; w &= w - 1)
        m.push_back(k * 64 + std::countr_zero(w));
    return m;
  };
  for (const auto& [p, q] : pq)
    for (int x = p.first(); x >= 0; x = p.next(x))
      if (auto m = two(t.in_row(x), q); m.size() == 2) return {false, BridgeCondition::B2, {x, m[0], m[1]}};
  for (const auto& [p, q] : pq)
    for (int x = q.first(); x >= 0; x = q.next(x))
      if (auto m = two(t.out_row(x), p); m.size() == 2) return {false, BridgeCondition::B3, {x, m[0], m[1]}};
  return r;
}

}  // namespace dfree
