#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <stdexcept>

#include "dfree/decompose.hpp"

namespace dfree {

namespace {

// Positions p < q of s carry a backedge.
bool back(const Tournament& t, const Ordering& s, int p, int q) { return t.edge(s[q], s[p]); }

struct Counts {
  std::vector<int> left, right;  // by position
};

Counts counts(const Tournament& t, const Ordering& s) {
  const int n = static_cast<int>(s.size());
  Counts c{std::vector<int>(n, 0), std::vector<int>(n, 0)};
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (back(t, s, p, q)) {
        ++c.right[p];
        ++c.left[q];
      }
  return c;
}

bool paved_at(const Tournament& t, const Ordering& s, int p) {
  int l = 0, r = 0;
  for (int q = 0; q < static_cast<int>(s.size()); ++q) {
    if (q < p && back(t, s, q, p)) ++l;
    if (q > p && back(t, s, p, q)) ++r;
  }
  return l <= 1 && r <= 1;
}

bool all_paved(const Tournament& t, const Ordering& s) {
  auto c = counts(t, s);
  for (std::size_t p = 0; p < s.size(); ++p)
    if (c.left[p] > 1 || c.right[p] > 1) return false;
  return true;
}

Ordering eliminate(const Tournament& t, Ordering s) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t p = 0; p + 1 < s.size(); ++p)
      if (back(t, s, p, p + 1)) {
        std::swap(s[p], s[p + 1]);
        changed = true;
      }
  }
  return s;
}

Ordering reversed(Ordering s) {
  std::reverse(s.begin(), s.end());
  return s;
}

int position(const Ordering& s, int v) {
  return static_cast<int>(std::find(s.begin(), s.end(), v) - s.begin());
}

// Reorders the cyclic triangle at positions p, p+1, p+2.
std::optional<Ordering> reshuffle_at(const Tournament& t, const Ordering& s, int p) {
  const int n = static_cast<int>(s.size());
  if (p < 0 || p + 2 >= n) return std::nullopt;
  const std::array<int, 3> x{s[p], s[p + 1], s[p + 2]};
  if (!is_cyclic_triangle(t, x[0], x[1], x[2])) return std::nullopt;
  std::array<bool, 3> out_left{}, out_right{};
  for (int r = 0; r < 3; ++r) {
    for (int q = 0; q < p; ++q) out_left[r] = out_left[r] || back(t, s, q, p + r);
    for (int q = p + 3; q < n; ++q) out_right[r] = out_right[r] || back(t, s, p + r, q);
    if (out_left[r] && out_right[r]) return std::nullopt;
  }
  for (int a = 0; a < 3; ++a)
    for (int c = 0; c < 3; ++c) {
      if (a == c || out_right[a] || out_left[c]) continue;
      const int b = 3 - a - c;
      std::array<int, 3> block;
      if (t.edge(x[a], x[b]) && t.edge(x[b], x[c])) block = {x[a], x[b], x[c]};
      else if (!out_left[b]) block = {x[a], x[c], x[b]};
      else block = {x[b], x[a], x[c]};
      Ordering r = s;
      std::copy(block.begin(), block.end(), r.begin() + p);
      if (paved_at(t, r, p) && paved_at(t, r, p + 1) && paved_at(t, r, p + 2)) return r;
    }
  return std::nullopt;
}

std::optional<Ordering> repair(const Tournament& t, Ordering s, int p, bool mirrored);

// Completes a candidate: paving as is, paving after removing consecutive
// backedges, or a single nearly paved vertex to repair.
std::optional<Ordering> finish(const Tournament& t, const Ordering& s) {
  auto c = counts(t, s);
  std::vector<int> bad;
  for (std::size_t p = 0; p < s.size(); ++p)
    if (c.left[p] > 1 || c.right[p] > 1) bad.push_back(static_cast<int>(p));
  if (bad.empty()) return eliminate(t, s);
  if (bad.size() != 1) return std::nullopt;
  const int p = bad[0], l = c.left[p], r = c.right[p];
  if (!((l == 2 && r <= 1) || (l <= 1 && r == 2))) return std::nullopt;
  return repair(t, s, p, false);
}

std::optional<Ordering> repair(const Tournament& t, Ordering s, int p, bool mirrored) {
  const int n = static_cast<int>(s.size());
  std::vector<int> left, right;
  for (int q = 0; q < n; ++q) {
    if (q < p && back(t, s, q, p)) left.push_back(q);
    if (q > p && back(t, s, p, q)) right.push_back(q);
  }
  if (left.size() == 2) {
    if (mirrored) return std::nullopt;
    auto r = repair(reverse(t), reversed(s), n - 1 - p, true);
    if (r) return reversed(*r);
    return r;
  }
  if (right.size() != 2) return std::nullopt;
  if (right[0] == p + 1) {
    std::swap(s[p], s[p + 1]);
  } else if (right[0] == p + 2) {
    auto r = reshuffle_at(t, s, p);
    if (!r) return std::nullopt;
    s = std::move(*r);
  } else {
    return std::nullopt;
  }
  if (!all_paved(t, s)) return std::nullopt;
  return eliminate(t, s);
}

std::optional<Ordering> insert_impl(const Tournament& t, int x, const Ordering& s,
                                    bool mirrored);

std::optional<Ordering> insert_mirrored(const Tournament& t, int x, const Ordering& s,
                                        bool mirrored) {
  if (mirrored) return std::nullopt;
  auto r = insert_impl(reverse(t), x, reversed(s), true);
  if (r) return reversed(*r);
  return r;
}

std::optional<Ordering> insert_impl(const Tournament& t, int x, const Ordering& s,
                                    bool mirrored) {
  const int m = static_cast<int>(s.size());
  std::vector<int> outs, ins;
  for (int p = 0; p < m; ++p) (t.edge(x, s[p]) ? outs : ins).push_back(p);
  auto with_x_at = [&](int q) {
    Ordering r = s;
    r.insert(r.begin() + q, x);
    return r;
  };
  auto v = [&](int p) { return s[p]; };
  auto splice = [&](int from, int to, const std::vector<int>& block) {
    if (static_cast<int>(block.size()) != to - from + 2)
      throw std::logic_error("insertion block has the wrong size");
    Ordering r(s.begin(), s.begin() + from);
    r.insert(r.end(), block.begin(), block.end());
    r.insert(r.end(), s.begin() + to + 1, s.end());
    return r;
  };
  auto bk = [&](int p, int q) { return back(t, s, p, q); };

  if (ins.empty()) return with_x_at(0);
  if (outs.empty()) return with_x_at(m);
  if (ins.size() == 1) return finish(t, with_x_at(0));
  if (outs.size() == 1) return finish(t, with_x_at(m));

  const int h = outs[0], i = outs[1];
  const int k = ins.back(), j = ins[ins.size() - 2];

  if (i > j) {
    if (i >= j + 2) {
      if (!t.edge(x, v(j + 1))) return finish(t, with_x_at(j + 2));
      return finish(t, with_x_at(j + 1));
    }
    const Ordering tau = with_x_at(j + 1);
    if (auto r = finish(t, tau)) return r;
    int hp = -1, kp = -1;
    for (int q = h + 1; q < m; ++q)
      if (bk(h, q)) hp = q;
    for (int q = 0; q < k; ++q)
      if (bk(q, k)) kp = q;
    if (hp < 0 || kp < 0) return std::nullopt;
    if (hp > k || kp < h) return std::nullopt;
    if (hp == k && kp == h) {
      if (h != j - 1 || k != i + 1) return std::nullopt;
      return finish(t, splice(h, k, {v(j), v(k), x, v(h), v(i)}));
    }
    if (hp <= kp) {
      auto r1 = reshuffle_at(t, tau, position(tau, v(h)));
      if (!r1) return std::nullopt;
      auto r2 = reshuffle_at(t, *r1, position(*r1, v(k)) - 2);
      if (!r2) return std::nullopt;
      return finish(t, *r2);
    }
    if (h < kp && kp < hp && hp <= j) {
      if (kp != h + 1 || hp != h + 2 || i != k - 1) return std::nullopt;
      auto r1 = reshuffle_at(t, tau, h);
      if (!r1) return std::nullopt;
      auto r2 = reshuffle_at(t, *r1, position(*r1, x));
      if (!r2) return std::nullopt;
      return finish(t, *r2);
    }
    if (i <= kp && kp < hp && hp < k) return insert_mirrored(t, x, s, mirrored);
    return std::nullopt;
  }

  if (j > i + 3) return std::nullopt;
  const bool hj = bk(h, j), hk = bk(h, k), ij = bk(i, j), ik = bk(i, k);
  const int a = i - h, b = k - j;
  if (hj && ik && !hk && !ij) {
    if (j != i + 1 || a > 2 || b > 2) return std::nullopt;
    if (a == 1 && b == 1) return finish(t, splice(h, k, {v(j), x, v(h), v(k), v(i)}));
    if (a == 1 && b == 2)
      return finish(t, splice(h, k, {v(j), x, v(h), v(k), v(i), v(j + 1)}));
    if (a == 2 && b == 1) return insert_mirrored(t, x, s, mirrored);
    return finish(t, splice(h, k, {v(h + 1), v(j), x, v(h), v(k), v(i), v(j + 1)}));
  }
  if (hj && !ik && !hk && !ij) {
    if (j != i + 1 || a > 2) return std::nullopt;
    if (a == 1) return finish(t, splice(h, j, {v(j), x, v(h), v(i)}));
    return finish(t, splice(h, j, {v(h + 1), v(j), x, v(h), v(i)}));
  }
  if (ik && !hj && !hk && !ij) return insert_mirrored(t, x, s, mirrored);
  if (ij && !hj && !hk && !ik) {
    if (j == i + 2) {
      if (!t.edge(x, v(i + 1))) return insert_mirrored(t, x, s, mirrored);
      if (b == 1) return finish(t, splice(i, k, {v(j), x, v(i), v(k), v(i + 1)}));
      if (b == 2) return finish(t, splice(i, k, {v(j), x, v(i), v(k), v(i + 1), v(j + 1)}));
      return std::nullopt;
    }
    if (j == i + 3) {
      if (!t.edge(v(i + 1), x) || !t.edge(x, v(i + 2)) || a > 2 || b > 2) return std::nullopt;
      std::vector<int> block;
      if (a == 2) block.push_back(v(h + 1));
      block.insert(block.end(), {v(i + 1), v(h), v(j), x, v(i), v(k), v(i + 2)});
      if (b == 2) block.push_back(v(j + 1));
      return finish(t, splice(h, k, block));
    }
  }
  return std::nullopt;
}

void require_ordering(const Tournament& t, const Ordering& sigma) {
  if (!is_ordering(sigma, t.size())) throw PreconditionViolated("not an ordering of the tournament");
}

}  // namespace

PavedStatus paved_status(const Tournament& t, const Ordering& sigma) {
  require_ordering(t, sigma);
  auto c = counts(t, sigma);
  PavedStatus st{std::vector<int>(t.size()), std::vector<int>(t.size())};
  for (int p = 0; p < t.size(); ++p) {
    st.left[sigma[p]] = c.left[p];
    st.right[sigma[p]] = c.right[p];
  }
  return st;
}

bool check_paving(const Tournament& t, const Ordering& sigma) {
  if (!is_ordering(sigma, t.size())) return false;
  auto c = counts(t, sigma);
  for (int p = 0; p < t.size(); ++p) {
    if (c.left[p] > 1 || c.right[p] > 1) return false;
    if (p + 1 < t.size() && back(t, sigma, p, p + 1)) return false;
  }
  return true;
}

Ordering eliminate_p1_violations(const Tournament& t, const Ordering& sigma) {
  require_ordering(t, sigma);
  if (!all_paved(t, sigma)) throw P2ViolatedInput("some vertex has two neighbours on one side");
  return eliminate(t, sigma);
}

std::optional<Ordering> reshuffle_triangle(const Tournament& t, const Ordering& sigma, int a,
                                           int b, int c) {
  require_ordering(t, sigma);
  const int p = position(sigma, a);
  if (p + 2 >= t.size() || sigma[p + 1] != b || sigma[p + 2] != c)
    throw PreconditionViolated("a, b, c are not consecutive in this order");
  if (!is_cyclic_triangle(t, a, b, c)) throw PreconditionViolated("a, b, c is not a cyclic triangle");
  return reshuffle_at(t, sigma, p);
}

std::optional<Ordering> insert_vertex(const Tournament& t, int x, const Ordering& sigma) {
  const int n = t.size();
  if (x < 0 || x >= n) throw PreconditionViolated("vertex out of range");
  std::vector<char> seen(n, 0);
  if (static_cast<int>(sigma.size()) != n - 1)
    throw PreconditionViolated("ordering must cover every vertex but x");
  for (int v : sigma) {
    if (v < 0 || v >= n || v == x || seen[v]) throw PreconditionViolated("ordering must cover every vertex but x");
    seen[v] = 1;
  }
  if (auto r = insert_impl(t, x, sigma, false)) return r;
  if (auto w = find_delta122(t)) throw NotFree(*w);
  return std::nullopt;
}

Ordering paving_ordering(const Tournament& t) {
  Ordering s;
  std::vector<int> prefix;
  for (int v = 0; v < t.size(); ++v) {
    prefix.push_back(v);
    const Tournament tv = induced(t, prefix).tournament;
    std::optional<Ordering> r;
    try {
      r = insert_vertex(tv, v, s);
    } catch (const NotFree& e) {
      throw PreconditionViolated(e.what());
    }
    if (!r) {
      if (auto c = find_basic_copy(tv)) {
        std::string at;
        for (int u : c->vertices) at += (at.empty() ? "" : ",") + std::to_string(u);
        throw PreconditionViolated("tournament contains " + to_string(c->kind) + " on {" + at + "}");
      }
      throw std::logic_error("paving insertion failed on a basic-free tournament");
    }
    s = std::move(*r);
  }
  return s;
}

}  // namespace dfree
