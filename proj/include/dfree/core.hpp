#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dfree {

using Ordering = std::vector<int>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotTournament : Error {
  using Error::Error;
};
struct SizeLimitExceeded : Error {
  using Error::Error;
};
struct PreconditionViolated : Error {
  using Error::Error;
};
struct ParseError : Error {
  ParseError(int line, int column, const std::string& what);
  int line;
  int column;
};

// Dynamic bitset over 0..n-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}
  VertexSet(int n, const std::vector<int>& members);
  VertexSet(int n, const std::uint64_t* words);

  int universe() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  int count() const;
  bool empty() const;
  int first() const;  // -1 if empty
  int next(int i) const;  // smallest member > i, or -1
  std::vector<int> members() const;

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }

  const std::uint64_t* data() const { return w_.data(); }
  int words() const { return static_cast<int>(w_.size()); }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Adjacency is kept as out- and in-rows so neighbourhood intersections are
// word operations.
class Tournament {
 public:
  Tournament() = default;
  // Transitive tournament with i -> j for all i < j.
  explicit Tournament(int n);

  int size() const { return n_; }
  int words() const { return w_; }
  bool edge(int u, int v) const {
    return (out_[u * w_ + (v >> 6)] >> (v & 63)) & 1;
  }
  void orient(int u, int v);  // makes u -> v

  const std::uint64_t* out_row(int v) const { return &out_[v * w_]; }
  const std::uint64_t* in_row(int v) const { return &in_[v * w_]; }
  VertexSet out(int v) const { return VertexSet(n_, out_row(v)); }
  VertexSet in(int v) const { return VertexSet(n_, in_row(v)); }
  int out_degree(int v) const;
  int in_degree(int v) const { return n_ - 1 - out_degree(v); }

  bool operator==(const Tournament& o) const {
    return n_ == o.n_ && out_ == o.out_;
  }

 private:
  int n_ = 0;
  int w_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

Tournament tournament_from_matrix(const std::vector<std::string>& rows);
Tournament tournament_from_matrix(const std::vector<std::vector<int>>& rows);
std::vector<std::string> matrix_rows(const Tournament& t);

// Upper-triangle bit k (row-major over i < j) set means j -> i.
Tournament tournament_from_mask(int n, std::uint64_t mask);

Tournament parse_tmt(std::string_view text);
std::string to_tmt(const Tournament& t);
Tournament read_tmt_file(const std::string& path);  // "-" reads stdin

bool is_ordering(const Ordering& sigma, int n);
Ordering identity_ordering(int n);
Ordering positions_of(const Ordering& sigma);

class OrderedGraph {
 public:
  OrderedGraph() = default;
  OrderedGraph(int n, Ordering ordering);

  int size() const { return n_; }
  const Ordering& ordering() const { return order_; }
  int position(int v) const { return pos_[v]; }
  void add_edge(int a, int b);
  bool has_edge(int a, int b) const { return adj_[a].test(b); }
  const VertexSet& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  int edge_count() const;
  // Sorted (min, max) vertex pairs.
  std::vector<std::pair<int, int>> edges() const;
  int left_degree(int v) const;
  int right_degree(int v) const;

 private:
  int n_ = 0;
  Ordering order_;
  std::vector<int> pos_;
  std::vector<VertexSet> adj_;
};

OrderedGraph backedge_graph(const Tournament& t, const Ordering& sigma);
int backedge_count(const Tournament& t, const Ordering& sigma);

// Rebuilds the tournament whose backedge graph under g's ordering is g.
Tournament tournament_from_backedges(const OrderedGraph& g);

struct Induced {
  Tournament tournament;
  std::vector<int> old_to_new;  // -1 for dropped vertices
  std::vector<int> new_to_old;
};
Induced induced(const Tournament& t, const std::vector<int>& vertices);

Tournament reverse(const Tournament& t);
bool is_transitive(const Tournament& t);
bool is_transitive_subset(const Tournament& t, const std::vector<int>& vertices);
bool is_cyclic_triangle(const Tournament& t, int a, int b, int c);

inline constexpr int kIsomorphismCap = 8;

// Mapping sends pattern vertex i to host vertex map[i].
std::optional<std::vector<int>> isomorphic(const Tournament& pattern,
                                           const Tournament& host);
std::optional<std::vector<int>> isomorphic(const OrderedGraph& pattern,
                                           const OrderedGraph& host);

struct Component {
  std::vector<int> vertices;  // sorted by position
  OrderedGraph graph;         // vertex i is vertices[i], identity ordering
  bool consecutive = false;
};
std::vector<Component> components(const OrderedGraph& g);

}  // namespace dfree
