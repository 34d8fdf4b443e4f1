#include "dfree/construct.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <json.hpp>

namespace dfree {

Substitution substitute(const Tournament& t, int v, const Tournament& s) {
  const int n = t.size(), k = s.size();
  if (v < 0 || v >= n) throw PreconditionViolated("substitution vertex out of range");
  Substitution r;
  r.host_map.assign(n, -1);
  for (int i = 0; i < n; ++i)
    if (i != v) r.host_map[i] = i < v ? i : i + k - 1;
  for (int i = 0; i < k; ++i) r.inner_map.push_back(v + i);
  // origin[new] = host vertex it copies
  std::vector<int> origin(n + k - 1);
  for (int i = 0; i < n; ++i)
    if (i != v) origin[r.host_map[i]] = i;
  for (int i = 0; i < k; ++i) origin[v + i] = v;
  r.tournament = Tournament(n + k - 1);
  for (int a = 0; a < n + k - 1; ++a)
    for (int b = a + 1; b < n + k - 1; ++b) {
      bool ab = origin[a] == v && origin[b] == v ? s.edge(a - v, b - v)
                                                 : t.edge(origin[a], origin[b]);
      if (!ab) r.tournament.orient(b, a);
    }
  return r;
}

Join p7minus_join(const Tournament& t, int u, int v) {
  const int n = t.size();
  if (u == v || u < 0 || v < 0 || u >= n || v >= n || !t.edge(u, v))
    throw PreconditionViolated("join site is not an edge");
  const Tournament& s = pattern(BasicKind::P7Minus);
  Join r;
  r.host_map.assign(n, -1);
  std::vector<int> origin;
  for (int i = 0; i < n; ++i)
    if (i != u && i != v) {
      r.host_map[i] = static_cast<int>(origin.size());
      origin.push_back(i);
    }
  const int base = static_cast<int>(origin.size());
  for (int i = 0; i < 6; ++i) r.inner_map.push_back(base + i);
  std::vector<int> slot(6);
  for (int k = 0; k < 3; ++k) {
    slot[p7minus_d2()[k]] = u;
    slot[p7minus_d1()[k]] = v;
    r.a1[k] = base + p7minus_d2()[k];
    r.a2[k] = base + p7minus_d1()[k];
  }
  for (int i = 0; i < 6; ++i) origin.push_back(slot[i]);
  const int m = base + 6;
  r.tournament = Tournament(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      bool ab = a >= base ? s.edge(a - base, b - base) : t.edge(origin[a], origin[b]);
      if (!ab) r.tournament.orient(b, a);
    }
  return r;
}

namespace {

Tournament permute(const Tournament& t, const std::vector<int>& mapping) {
  const int n = t.size();
  if (!is_ordering(mapping, n)) throw ReplayPreconditionFailed("step mapping is not a permutation");
  Tournament r(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (t.edge(a, b)) r.orient(mapping[a], mapping[b]);
      else r.orient(mapping[b], mapping[a]);
    }
  return r;
}

}  // namespace

Tournament apply_step(const Tournament& t, const Step& s) {
  if (s.op == Step::Op::Substitute) {
    if (s.at < 0 || s.at >= t.size()) throw ReplayPreconditionFailed("substitution site out of range");
    if (!is_nice_vertex(t, s.at).nice)
      throw ReplayPreconditionFailed("substitution site " + std::to_string(s.at) + " is not nice");
    return permute(substitute(t, s.at, pattern(s.kind)).tournament, s.mapping);
  }
  if (s.at < 0 || s.at2 < 0 || s.at >= t.size() || s.at2 >= t.size() || s.at == s.at2 ||
      !t.edge(s.at, s.at2))
    throw ReplayPreconditionFailed("join site is not an edge");
  if (!is_bridge(t, s.at, s.at2).bridge)
    throw ReplayPreconditionFailed("join site " + std::to_string(s.at) + "->" +
                                   std::to_string(s.at2) + " is not a bridge");
  return permute(p7minus_join(t, s.at, s.at2).tournament, s.mapping);
}

Tournament reconstruct(const DecompositionTree& tree) {
  Tournament t = tree.base;
  for (const auto& s : tree.steps) t = apply_step(t, s);
  return t;
}

std::string tree_to_json(const DecompositionTree& tree, int indent) {
  nlohmann::ordered_json j;
  j["base"]["n"] = tree.base.size();
  j["base"]["matrix"] = matrix_rows(tree.base);
  j["base"]["ordering"] = tree.ordering;
  j["steps"] = nlohmann::ordered_json::array();
  for (const auto& s : tree.steps) {
    nlohmann::ordered_json o;
    if (s.op == Step::Op::Substitute) {
      o["op"] = "substitute";
      o["at"] = s.at;
      o["kind"] = to_string(s.kind);
    } else {
      o["op"] = "join";
      o["at"] = {s.at, s.at2};
    }
    o["mapping"] = s.mapping;
    j["steps"].push_back(o);
  }
  return j.dump(indent);
}

DecompositionTree tree_from_json(const std::string& text) {
  DecompositionTree tree;
  try {
    auto j = nlohmann::json::parse(text);
    auto rows = j.at("base").at("matrix").get<std::vector<std::string>>();
    if (static_cast<int>(rows.size()) != j.at("base").at("n").get<int>())
      throw ParseError(0, 0, "base.n does not match matrix");
    tree.base = tournament_from_matrix(rows);
    tree.ordering = j.at("base").at("ordering").get<Ordering>();
    for (const auto& o : j.at("steps")) {
      Step s;
      auto op = o.at("op").get<std::string>();
      if (op == "substitute") {
        s.op = Step::Op::Substitute;
        s.at = o.at("at").get<int>();
        s.kind = basic_kind_from_string(o.at("kind").get<std::string>());
      } else if (op == "join") {
        s.op = Step::Op::Join;
        auto e = o.at("at").get<std::vector<int>>();
        if (e.size() != 2) throw ParseError(0, 0, "join site must have two vertices");
        s.at = e[0];
        s.at2 = e[1];
      } else {
        throw ParseError(0, 0, "unknown op '" + op + "'");
      }
      s.mapping = o.at("mapping").get<std::vector<int>>();
      tree.steps.push_back(std::move(s));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, 0, e.what());
  } catch (const NotTournament& e) {
    throw ParseError(0, 0, e.what());
  }
  return tree;
}

namespace {

std::optional<std::pair<Tournament, Ordering>> try_paving(int n, double density,
                                                          std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::geometric_distribution<int> extra_gap(0.5);
  // Vertices are positions until the final relabeling.
  Tournament t(n);
  std::vector<char> used(n, 0);
  for (int p = 0; p < n; ++p) {
    if (used[p] || coin(rng) >= density) continue;
    used[p] = 1;
    int cur = p;
    while (true) {
      int q = cur + 2 + extra_gap(rng);
      while (q < n && used[q]) ++q;
      if (q >= n) break;
      t.orient(q, cur);
      if (has_delta122_through(t, q)) {
        t.orient(cur, q);
        break;
      }
      used[q] = 1;
      cur = q;
      if (coin(rng) >= density) break;
    }
  }
  if (find_delta122(t)) return std::nullopt;
  Ordering label = identity_ordering(n);
  std::shuffle(label.begin(), label.end(), rng);
  Tournament r(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (t.edge(a, b)) r.orient(label[a], label[b]);
      else r.orient(label[b], label[a]);
    }
  return std::pair{std::move(r), std::move(label)};
}

std::vector<int> nice_vertices(const Tournament& t) {
  std::vector<int> out;
  for (int v = 0; v < t.size(); ++v)
    if (is_nice_vertex(t, v).nice) out.push_back(v);
  return out;
}

bool disjoint(const std::uint64_t* a, const std::uint64_t* b, int words) {
  for (int k = 0; k < words; ++k)
    if (a[k] & b[k]) return false;
  return true;
}

std::vector<std::pair<int, int>> bridges(const Tournament& t) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < t.size(); ++u)
    for (int v = 0; v < t.size(); ++v)
      if (u != v && t.edge(u, v) && disjoint(t.out_row(u), t.in_row(v), t.words()) &&
          is_bridge(t, u, v).bridge)
        out.emplace_back(u, v);
  return out;
}

}  // namespace

std::pair<Tournament, Ordering> gen_paving(const GenParams& params) {
  if (params.n_target < 1) throw PreconditionViolated("n_target must be at least 1");
  if (params.backedge_density < 0 || params.backedge_density > 1)
    throw PreconditionViolated("backedge_density must lie in [0,1]");
  std::mt19937_64 rng(params.seed);
  for (int attempt = 0; attempt < kGenRetryBudget; ++attempt)
    if (auto r = try_paving(params.n_target, params.backedge_density, rng)) return *r;
  throw GenerationExhausted("no Delta(1,2,2)-free paving sample after " +
                            std::to_string(kGenRetryBudget) + " attempts");
}

std::pair<Tournament, DecompositionTree> gen_free(const GenParams& params) {
  if (params.n_target < 1) throw PreconditionViolated("n_target must be at least 1");
  if (params.subst_weight < 0 || params.join_weight < 0)
    throw PreconditionViolated("weights must be non-negative");
  const bool expand = params.subst_weight + params.join_weight > 0;
  const int base_n = expand ? std::max(1, (params.n_target + 1) / 2) : params.n_target;
  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const std::array kinds{BasicKind::T5, BasicKind::P7Minus, BasicKind::P7};
  for (int attempt = 0; attempt < kGenRetryBudget; ++attempt) {
    GenParams bp = params;
    bp.n_target = base_n;
    bp.seed = rng();
    auto [t, order] = gen_paving(bp);
    DecompositionTree tree{t, order, {}};
    bool stuck = false;
    while (expand && t.size() < params.n_target) {
      auto nice = params.subst_weight > 0 ? nice_vertices(t) : std::vector<int>{};
      auto br = params.join_weight > 0 ? bridges(t) : std::vector<std::pair<int, int>>{};
      const double ws = nice.empty() ? 0 : params.subst_weight;
      const double wj = br.empty() ? 0 : params.join_weight;
      if (ws + wj == 0) {
        stuck = true;
        break;
      }
      Step s;
      if (coin(rng) * (ws + wj) < ws) {
        s.op = Step::Op::Substitute;
        s.at = nice[std::uniform_int_distribution<std::size_t>(0, nice.size() - 1)(rng)];
        s.kind = kinds[std::uniform_int_distribution<int>(0, 2)(rng)];
        s.mapping = identity_ordering(t.size() + basic_size(s.kind) - 1);
      } else {
        auto e = br[std::uniform_int_distribution<std::size_t>(0, br.size() - 1)(rng)];
        s.op = Step::Op::Join;
        s.at = e.first;
        s.at2 = e.second;
        s.mapping = identity_ordering(t.size() + 4);
      }
      t = apply_step(t, s);
      tree.steps.push_back(std::move(s));
    }
    if (!stuck) return {std::move(t), std::move(tree)};
  }
  throw GenerationExhausted("no legal expansion site after " +
                            std::to_string(kGenRetryBudget) + " base samples");
}

}  // namespace dfree
