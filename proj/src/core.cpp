#include "dfree/core.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

namespace dfree {

ParseError::ParseError(int line, int column, const std::string& what)
    : Error("line " + std::to_string(line) + ", column " +
            std::to_string(column) + ": " + what),
      line(line),
      column(column) {}

VertexSet::VertexSet(int n, const std::vector<int>& members) : VertexSet(n) {
  for (int v : members) set(v);
}

VertexSet::VertexSet(int n, const std::uint64_t* words)
    : n_(n), w_(words, words + (n + 63) / 64) {}

int VertexSet::count() const {
  int c = 0;
  for (auto x : w_) c += std::popcount(x);
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(w_.begin(), w_.end(), [](auto x) { return x == 0; });
}

int VertexSet::first() const { return next(-1); }

int VertexSet::next(int i) const {
  ++i;
  if (i >= n_) return -1;
  std::size_t k = i >> 6;
  std::uint64_t x = w_[k] & (~std::uint64_t{0} << (i & 63));
  while (true) {
    if (x) return static_cast<int>(k * 64 + std::countr_zero(x));
    if (++k == w_.size()) return -1;
    x = w_[k];
  }
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
  return *this;
}
VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
  return *this;
}
VertexSet& VertexSet::operator-=(const VertexSet& o) {
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
  return *this;
}

Tournament::Tournament(int n)
    : n_(n),
      w_((n + 63) / 64),
      out_(static_cast<std::size_t>(n) * w_, 0),
      in_(static_cast<std::size_t>(n) * w_, 0) {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out_[i * w_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
      in_[j * w_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
    }
}

void Tournament::orient(int u, int v) {
  const auto bu = std::uint64_t{1} << (u & 63);
  const auto bv = std::uint64_t{1} << (v & 63);
  out_[u * w_ + (v >> 6)] |= bv;
  in_[v * w_ + (u >> 6)] |= bu;
  out_[v * w_ + (u >> 6)] &= ~bu;
  in_[u * w_ + (v >> 6)] &= ~bv;
}

int Tournament::out_degree(int v) const {
  int c = 0;
  for (int k = 0; k < w_; ++k) c += std::popcount(out_[v * w_ + k]);
  return c;
}

Tournament tournament_from_matrix(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  Tournament t(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw NotTournament("row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n; ++j) {
      int a = rows[i][j];
      if (a != 0 && a != 1) throw NotTournament("entries must be 0 or 1");
      if (i == j && a) throw NotTournament("nonzero diagonal at " + std::to_string(i));
      if (i < j) {
        if (a + rows[j][i] != 1)
          throw NotTournament("entries (" + std::to_string(i) + "," +
                              std::to_string(j) + ") and (" + std::to_string(j) +
                              "," + std::to_string(i) + ") are not complementary");
        if (a) t.orient(i, j);
        else t.orient(j, i);
      }
    }
  }
  return t;
}

Tournament tournament_from_matrix(const std::vector<std::string>& rows) {
  std::vector<std::vector<int>> m;
  for (const auto& r : rows) {
    std::vector<int> row;
    for (char c : r) {
      if (c != '0' && c != '1') throw NotTournament("entries must be 0 or 1");
      row.push_back(c - '0');
    }
    m.push_back(std::move(row));
  }
  return tournament_from_matrix(m);
}

std::vector<std::string> matrix_rows(const Tournament& t) {
  std::vector<std::string> rows(t.size(), std::string(t.size(), '0'));
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j)
      if (i != j && t.edge(i, j)) rows[i][j] = '1';
  return rows;
}

Tournament tournament_from_mask(int n, std::uint64_t mask) {
  Tournament t(n);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if ((mask >> k) & 1) t.orient(j, i);
  return t;
}

Tournament parse_tmt(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t");
    std::string body = line.substr(first, last - first + 1);
    if (n < 0) {
      for (std::size_t c = 0; c < body.size(); ++c)
        if (body[c] < '0' || body[c] > '9')
          throw ParseError(lineno, static_cast<int>(first + c) + 1,
                           "expected vertex count");
      if (body.size() > 6) throw ParseError(lineno, 1, "vertex count too large");
      n = std::stoi(body);
      continue;
    }
    if (static_cast<int>(rows.size()) == n)
      throw ParseError(lineno, 1, "unexpected extra row");
    for (std::size_t c = 0; c < body.size(); ++c)
      if (body[c] != '0' && body[c] != '1')
        throw ParseError(lineno, static_cast<int>(first + c) + 1,
                         "expected '0' or '1'");
    if (static_cast<int>(body.size()) != n)
      throw ParseError(lineno, static_cast<int>(first + body.size()) + 1,
                       "row has " + std::to_string(body.size()) +
                           " entries, expected " + std::to_string(n));
    rows.push_back(body);
  }
  if (n < 0) throw ParseError(lineno + 1, 1, "missing vertex count");
  if (static_cast<int>(rows.size()) != n)
    throw ParseError(lineno + 1, 1,
                     "expected " + std::to_string(n) + " rows, found " +
                         std::to_string(rows.size()));
  try {
    return tournament_from_matrix(rows);
  } catch (const NotTournament& e) {
    throw ParseError(0, 0, e.what());
  }
}

std::string to_tmt(const Tournament& t) {
  std::string s = std::to_string(t.size()) + "\n";
  for (const auto& r : matrix_rows(t)) s += r + "\n";
  return s;
}

Tournament read_tmt_file(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw ParseError(0, 0, "cannot open " + path);
    buf << f.rdbuf();
  }
  return parse_tmt(buf.str());
}

bool is_ordering(const Ordering& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Ordering identity_ordering(int n) {
  Ordering o(n);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

Ordering positions_of(const Ordering& sigma) {
  Ordering pos(sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) pos[sigma[k]] = static_cast<int>(k);
  return pos;
}

OrderedGraph::OrderedGraph(int n, Ordering ordering)
    : n_(n), order_(std::move(ordering)), adj_(n, VertexSet(n)) {
  if (!is_ordering(order_, n)) throw PreconditionViolated("not an ordering");
  pos_ = positions_of(order_);
}

void OrderedGraph::add_edge(int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_)
    throw PreconditionViolated("bad edge");
  adj_[a].set(b);
  adj_[b].set(a);
}

int OrderedGraph::edge_count() const {
  int c = 0;
  for (const auto& s : adj_) c += s.count();
  return c / 2;
}

std::vector<std::pair<int, int>> OrderedGraph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < n_; ++a)
    for (int b = adj_[a].next(a); b >= 0; b = adj_[a].next(b)) e.emplace_back(a, b);
  return e;
}

int OrderedGraph::left_degree(int v) const {
  int c = 0;
  for (int u = adj_[v].first(); u >= 0; u = adj_[v].next(u))
    if (pos_[u] < pos_[v]) ++c;
  return c;
}

int OrderedGraph::right_degree(int v) const { return degree(v) - left_degree(v); }

OrderedGraph backedge_graph(const Tournament& t, const Ordering& sigma) {
  OrderedGraph g(t.size(), sigma);
  for (int p = 0; p < t.size(); ++p)
    for (int q = p + 1; q < t.size(); ++q)
      if (t.edge(sigma[q], sigma[p])) g.add_edge(sigma[p], sigma[q]);
  return g;
}

int backedge_count(const Tournament& t, const Ordering& sigma) {
  int c = 0;
  for (std::size_t p = 0; p < sigma.size(); ++p)
    for (std::size_t q = p + 1; q < sigma.size(); ++q)
      if (t.edge(sigma[q], sigma[p])) ++c;
  return c;
}

Tournament tournament_from_backedges(const OrderedGraph& g) {
  const int n = g.size();
  Tournament t(n);
  const auto& o = g.ordering();
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      if (g.has_edge(o[p], o[q])) t.orient(o[q], o[p]);
      else t.orient(o[p], o[q]);
    }
  return t;
}

Induced induced(const Tournament& t, const std::vector<int>& vertices) {
  Induced r;
  r.old_to_new.assign(t.size(), -1);
  for (int v : vertices) {
    if (v < 0 || v >= t.size()) throw PreconditionViolated("vertex out of range");
    if (r.old_to_new[v] >= 0) throw PreconditionViolated("repeated vertex");
    r.old_to_new[v] = static_cast<int>(r.new_to_old.size());
    r.new_to_old.push_back(v);
  }
  const int k = static_cast<int>(vertices.size());
  r.tournament = Tournament(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (t.edge(vertices[b], vertices[a])) r.tournament.orient(b, a);
  return r;
}

Tournament reverse(const Tournament& t) {
  Tournament r(t.size());
  for (int i = 0; i < t.size(); ++i)
    for (int j = i + 1; j < t.size(); ++j)
      if (t.edge(i, j)) r.orient(j, i);
  return r;
}

bool is_transitive(const Tournament& t) {
  std::vector<char> seen(t.size(), 0);
  for (int v = 0; v < t.size(); ++v) {
    int d = t.out_degree(v);
    if (seen[d]) return false;
    seen[d] = 1;
  }
  return true;
}

bool is_transitive_subset(const Tournament& t, const std::vector<int>& vertices) {
  const int k = static_cast<int>(vertices.size());
  std::vector<char> seen(k, 0);
  for (int a : vertices) {
    int d = 0;
    for (int b : vertices)
      if (a != b && t.edge(a, b)) ++d;
    if (seen[d]) return false;
    seen[d] = 1;
  }
  return true;
}

bool is_cyclic_triangle(const Tournament& t, int a, int b, int c) {
  if (a == b || b == c || a == c) return false;
  return (t.edge(a, b) && t.edge(b, c) && t.edge(c, a)) ||
         (t.edge(b, a) && t.edge(c, b) && t.edge(a, c));
}

namespace {

bool extend(const Tournament& p, const Tournament& h, const std::vector<int>& pdeg,
            const std::vector<int>& hdeg, std::vector<int>& map,
            std::vector<char>& used, int i) {
  const int n = p.size();
  if (i == n) return true;
  for (int c = 0; c < n; ++c) {
    if (used[c] || pdeg[i] != hdeg[c]) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) ok = p.edge(i, j) == h.edge(c, map[j]);
    if (!ok) continue;
    used[c] = 1;
    map[i] = c;
    if (extend(p, h, pdeg, hdeg, map, used, i + 1)) return true;
    used[c] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> isomorphic(const Tournament& pattern,
                                           const Tournament& host) {
  if (pattern.size() > kIsomorphismCap || host.size() > kIsomorphismCap)
    throw SizeLimitExceeded("isomorphism search is capped at " +
                            std::to_string(kIsomorphismCap) + " vertices");
  if (pattern.size() != host.size()) return std::nullopt;
  const int n = pattern.size();
  std::vector<int> pdeg(n), hdeg(n);
  for (int v = 0; v < n; ++v) {
    pdeg[v] = pattern.out_degree(v);
    hdeg[v] = host.out_degree(v);
  }
  {
    auto a = pdeg, b = hdeg;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  if (extend(pattern, host, pdeg, hdeg, map, used, 0)) return map;
  return std::nullopt;
}

std::optional<std::vector<int>> isomorphic(const OrderedGraph& pattern,
                                           const OrderedGraph& host) {
  if (pattern.size() != host.size()) return std::nullopt;
  const int n = pattern.size();
  std::vector<int> map(n);
  for (int k = 0; k < n; ++k) map[pattern.ordering()[k]] = host.ordering()[k];
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (pattern.has_edge(a, b) != host.has_edge(map[a], map[b])) return std::nullopt;
  return map;
}

std::vector<Component> components(const OrderedGraph& g) {
  const int n = g.size();
  std::vector<int> comp(n, -1);
  std::vector<Component> out;
  for (int start : g.ordering()) {
    if (comp[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> members{start};
    comp[start] = id;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const auto& nb = g.neighbours(members[k]);
      for (int u = nb.first(); u >= 0; u = nb.next(u))
        if (comp[u] < 0) {
          comp[u] = id;
          members.push_back(u);
        }
    }
    std::sort(members.begin(), members.end(),
              [&](int a, int b) { return g.position(a) < g.position(b); });
    Component c;
    c.consecutive = g.position(members.back()) - g.position(members.front()) + 1 ==
                    static_cast<int>(members.size());
    c.graph = OrderedGraph(static_cast<int>(members.size()),
                           identity_ordering(static_cast<int>(members.size())));
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        if (g.has_edge(members[a], members[b]))
          c.graph.add_edge(static_cast<int>(a), static_cast<int>(b));
    c.vertices = std::move(members);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace dfree
