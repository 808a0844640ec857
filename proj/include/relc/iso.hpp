#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "relc/limits.hpp"
#include "relc/structure.hpp"

namespace relc {

namespace detail {

// Incidence index: for each vertex, the tuples containing it (slot, index).
struct Incidence {
  std::vector<std::vector<std::pair<int, int>>> at;

  explicit Incidence(const Structure& a) : at(a.n) {
    for (int slot = 0; slot < a.sig.size(); ++slot)
      for (int ti = 0; ti < static_cast<int>(a.rels[slot].size()); ++ti) {
        int last = -1;
        Tuple sorted = a.rels[slot][ti];
        std::sort(sorted.begin(), sorted.end());
        for (int v : sorted) {
          if (v != last) at[v].emplace_back(slot, ti);
          last = v;
        }
      }
  }
};

// Per-vertex, per-(slot,position) tuple counts; an isomorphism invariant.
inline std::vector<std::vector<int>> position_degrees(const Structure& a) {
  std::vector<std::vector<int>> deg(a.n);
  int width = 0;
  for (int ar : a.sig.arities) width += ar;
  for (int v = 0; v < a.n; ++v) deg[v].assign(width, 0);
  int base = 0;
  for (int slot = 0; slot < a.sig.size(); ++slot) {
    for (const Tuple& t : a.rels[slot])
      for (int p = 0; p < static_cast<int>(t.size()); ++p) ++deg[t[p]][base + p];
    base += a.sig.arities[slot];
  }
  return deg;
}

// Shared backtracking over bijections a -> b that preserve and reflect every
// relation. Assigns vertices of `a` in index order, candidates ascending, so
// the first complete map found is the lexicographically least one extending
// the pinned pairs. The callback returns true to stop the search.
inline void for_each_isomorphism(const Structure& a, const Structure& b,
                                 const std::function<bool(const std::vector<int>&)>& cb,
                                 const Limits& lim = {},
                                 const std::vector<std::pair<int, int>>& pinned = {}) {
  if (a.sig != b.sig) throw std::invalid_argument("isomorphism: signature mismatch");
  if (a.n != b.n) return;
  for (int slot = 0; slot < a.sig.size(); ++slot)
    if (a.rels[slot].size() != b.rels[slot].size()) return;

  auto dega = position_degrees(a);
  auto degb = position_degrees(b);
  {
    auto sa = dega, sb = degb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return;
  }

  Incidence inca(a), incb(b);
  std::vector<int> map(a.n, -1), inv(a.n, -1);
  Budget budget(lim.max_nodes, "isomorphism search");

  // Consistency of assigning map[v] = w against already-assigned vertices.
  auto consistent = [&](int v, int w) {
    for (auto [slot, ti] : inca.at[v]) {
      const Tuple& t = a.rels[slot][ti];
      Tuple img(t.size());
      bool full = true;
      for (size_t i = 0; i < t.size(); ++i) {
        int m = (t[i] == v) ? w : map[t[i]];
        if (m < 0) {
          full = false;
          break;
        }
        img[i] = m;
      }
      if (full && !b.has_tuple(slot, img)) return false;
    }
    for (auto [slot, ti] : incb.at[w]) {
      const Tuple& t = b.rels[slot][ti];
      Tuple pre(t.size());
      bool full = true;
      for (size_t i = 0; i < t.size(); ++i) {
        int m = (t[i] == w) ? v : inv[t[i]];
        if (m < 0) {
          full = false;
          break;
        }
        pre[i] = m;
      }
      if (full && !a.has_tuple(slot, pre)) return false;
    }
    return true;
  };

  for (auto [v, w] : pinned) {
    if (v < 0 || v >= a.n || w < 0 || w >= b.n || map[v] >= 0 || inv[w] >= 0)
      throw std::invalid_argument("isomorphism: bad pinned assignment");
    if (dega[v] != degb[w] || !consistent(v, w)) return;
    map[v] = w;
    inv[w] = v;
  }

  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == a.n) return cb(map);
    if (map[v] >= 0) return rec(v + 1);
    for (int w = 0; w < b.n; ++w) {
      if (inv[w] >= 0 || dega[v] != degb[w]) continue;
      budget.spend();
      if (!consistent(v, w)) continue;
      map[v] = w;
      inv[w] = v;
      if (rec(v + 1)) return true;
      map[v] = -1;
      inv[w] = -1;
    }
    return false;
  };
  rec(0);
}

}  // namespace detail

// First isomorphism A -> B in lexicographic search order, or nullopt.
inline std::optional<std::vector<int>> find_isomorphism(const Structure& a, const Structure& b,
                                                        const Limits& lim = {}) {
  std::optional<std::vector<int>> out;
  detail::for_each_isomorphism(
      a, b,
      [&](const std::vector<int>& m) {
        out = m;
        return true;
      },
      lim);
  return out;
}

inline bool is_isomorphic(const Structure& a, const Structure& b, const Limits& lim = {}) {
  return find_isomorphism(a, b, lim).has_value();
}

inline std::vector<std::vector<int>> all_isomorphisms(const Structure& a, const Structure& b,
                                                      const Limits& lim = {}) {
  std::vector<std::vector<int>> out;
  detail::for_each_isomorphism(
      a, b,
      [&](const std::vector<int>& m) {
        out.push_back(m);
        return false;
      },
      lim);
  return out;
}

// ---------------------------------------------------------------------------
// Canonical forms. Used for isomorphism-type deduplication; two structures get
// equal keys iff they are isomorphic.

using CanonicalKey = std::vector<std::int64_t>;

// Exact structure encoding under the current labeling (not canonical).
inline CanonicalKey encode_structure(const Structure& a) {
  CanonicalKey key;
  key.push_back(a.n);
  key.push_back(a.sig.size());
  for (int ar : a.sig.arities) key.push_back(ar);
  for (const auto& ts : a.rels) {
    key.push_back(static_cast<std::int64_t>(ts.size()));
    for (const Tuple& t : ts)
      for (int v : t) key.push_back(v);
  }
  return key;
}

namespace detail {

// Iterated degree refinement. Returns a stable coloring with classes numbered
// by their (label-independent) signature order.
inline std::vector<int> stable_coloring(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> color(n, 0);
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      nb.reserve(adj[v].size());
      for (int w : adj[v]) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return sig[x] < sig[y]; });
    std::vector<int> next(n, 0);
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++c;
      next[order[i]] = c;
    }
    if (next == color) return color;
    color = std::move(next);
  }
}

// Canonical adjacency encoding of a graph: the minimum, over all placements
// compatible with the stable coloring, of the per-position bitmasks of edges
// to earlier positions. Branch-and-bound with prefix pruning.
inline CanonicalKey canonical_graph_key(const Structure& g, const Limits& lim) {
  int n = g.n;
  auto adj = graph_adjacency(g);
  std::vector<std::uint64_t> row(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : adj[v]) row[v] |= (std::uint64_t{1} << w);

  std::vector<int> color = stable_coloring(n, adj);
  // position p must hold a vertex of class class_of_pos[p]
  std::vector<int> class_of_pos;
  {
    int classes = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    std::vector<int> count(classes, 0);
    for (int c : color) ++count[c];
    for (int c = 0; c < classes; ++c)
      for (int i = 0; i < count[c]; ++i) class_of_pos.push_back(c);
  }

  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> cur(n, 0);
  std::vector<int> placed;  // placed[p] = vertex at position p
  placed.reserve(n);
  std::vector<char> used(n, 0);
  Budget budget(lim.max_nodes, "canonical form");

  // `ahead` is true while the current prefix is already strictly smaller than
  // best; pruning then stays off for the subtree. The flag can go stale after
  // best improves mid-subtree, so leaves re-compare the full encoding.
  std::function<void(int, bool)> rec = [&](int p, bool ahead) {
    if (p == n) {
      if (best.empty() || cur < best) best = cur;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || color[v] != class_of_pos[p]) continue;
      budget.spend();
      std::uint64_t bits = 0;
      for (int q = 0; q < p; ++q)
        if (row[v] >> placed[q] & 1) bits |= (std::uint64_t{1} << q);
      bool child_ahead = ahead;
      if (!best.empty() && !ahead) {
        if (bits > best[p]) continue;
        child_ahead = bits < best[p];
      }
      cur[p] = bits;
      used[v] = 1;
      placed.push_back(v);
      rec(p + 1, child_ahead);
      placed.pop_back();
      used[v] = 0;
    }
  };
  rec(0, true);

  CanonicalKey key;
  key.push_back(n);
  key.push_back(-1);  // graph marker
  for (int p = 0; p < n; ++p) key.push_back(static_cast<std::int64_t>(best[p]));
  return key;
}

}  // namespace detail

// The relabeling of `a` with the lexicographically least relation encoding
// over all vertex permutations. Exact and deterministic; exponential, so only
// for small structures.
inline Structure canonical_form_brute(const Structure& a, const Limits& lim = {}) {
  if (a.n > 10) throw limit_exceeded("canonical form: structure too large for exact canonization");
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  Structure best = a;
  CanonicalKey best_key = encode_structure(a);
  Budget budget(lim.max_nodes, "canonical form");
  while (std::next_permutation(perm.begin(), perm.end())) {
    budget.spend();
    Structure cand = relabel(a, perm);
    CanonicalKey key = encode_structure(cand);
    if (key < best_key) {
      best_key = std::move(key);
      best = std::move(cand);
    }
  }
  return best;
}

// Canonical key of a structure. Graphs use a refinement-pruned search; other
// structures fall back to exact minimization over all vertex permutations,
// which is exact but only feasible for small n.
inline CanonicalKey canonical_key(const Structure& a, const Limits& lim = {}) {
  if (is_graph_view(a) && a.n <= 62) return detail::canonical_graph_key(a, lim);
  return encode_structure(canonical_form_brute(a, lim));
}

}  // namespace relc
