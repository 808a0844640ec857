#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "relc/limits.hpp"
#include "relc/structure.hpp"

namespace relc {

// A g-cut with witnessing components: removing `cut` from the Gaifman graph
// leaves distinct connected components comp1 != comp2 whose neighborhoods
// both equal `cut` (equivalently, cut = N(comp1) ∩ N(comp2)).
struct GCut {
  std::vector<int> cut;
  std::vector<int> comp1, comp2;
  bool inclusion_minimal = true;  // among the returned cuts; informational
};

namespace detail {

inline std::vector<std::vector<int>> components_without(
    const std::vector<std::vector<int>>& adj, const std::vector<char>& removed) {
  int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < n; ++v) {
    if (removed[v] || comp[v] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack = {v};
    comp[v] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      out[id].push_back(u);
      for (int w : adj[u])
        if (!removed[w] && comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

inline std::vector<int> neighborhood_of(const std::vector<std::vector<int>>& adj,
                                        const std::vector<int>& verts) {
  std::vector<char> inside(adj.size(), 0), seen(adj.size(), 0);
  for (int v : verts) inside[v] = 1;
  std::vector<int> out;
  for (int v : verts)
    for (int w : adj[v])
      if (!inside[w] && !seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

// Validate the defining condition for a candidate vertex set and produce the
// witness pair: two distinct components of G - C whose neighborhoods equal C.
inline bool validate_gcut(const std::vector<std::vector<int>>& adj, const std::vector<int>& cut,
                          std::vector<int>& comp1, std::vector<int>& comp2) {
  std::vector<char> removed(adj.size(), 0);
  for (int v : cut) removed[v] = 1;
  auto comps = components_without(adj, removed);
  if (comps.size() < 2) return false;
  std::vector<const std::vector<int>*> full;
  for (const auto& c : comps)
    if (neighborhood_of(adj, c) == cut) full.push_back(&c);
  if (full.size() < 2) return false;
  comp1 = *full[0];
  comp2 = *full[1];
  return true;
}

}  // namespace detail

// All vertex sets C admitting two distinct components of the Gaifman graph
// minus C with N(comp1) = N(comp2) = C (so C = N(comp1) ∩ N(comp2), the
// defining condition). Enumeration: close-neighborhood seeding plus
// substitution, the standard minimal-separator generation, each candidate
// validated against the definition directly. For a disconnected Gaifman
// graph the empty set qualifies, witnessed by two whole components, together
// with the cuts of the individual components.
inline std::vector<GCut> minimal_g_separating_cuts(const Structure& a, const Limits& lim = {}) {
  Structure g = gaifman_graph(a);
  auto adj = graph_adjacency(g);
  Budget budget(lim.max_nodes, "separator enumeration");

  std::set<std::vector<int>> candidates, seen;
  auto seed_from = [&](const std::vector<char>& removed) {
    for (const auto& comp : detail::components_without(adj, removed)) {
      std::vector<int> nb = detail::neighborhood_of(adj, comp);
      if (!nb.empty()) candidates.insert(std::move(nb));
    }
  };

  // seeds: neighborhoods of components of G - N[v]
  for (int v = 0; v < g.n; ++v) {
    budget.spend();
    std::vector<char> removed(g.n, 0);
    removed[v] = 1;
    for (int w : adj[v]) removed[w] = 1;
    seed_from(removed);
  }

  // substitution closure: for separator S and x in S, neighborhoods of the
  // components of G - (S ∪ N[x]) are separators again
  std::vector<std::vector<int>> queue(candidates.begin(), candidates.end());
  seen = candidates;
  while (!queue.empty()) {
    std::vector<int> s = queue.back();
    queue.pop_back();
    for (int x : s) {
      budget.spend();
      std::vector<char> removed(g.n, 0);
      for (int v : s) removed[v] = 1;
      removed[x] = 1;
      for (int w : adj[x]) removed[w] = 1;
      for (const auto& comp : detail::components_without(adj, removed)) {
        std::vector<int> nb = detail::neighborhood_of(adj, comp);
        if (!nb.empty() && seen.insert(nb).second) {
          candidates.insert(nb);
          queue.push_back(std::move(nb));
        }
      }
    }
  }

  if (connected_components(g).size() > 1) candidates.insert(std::vector<int>{});

  std::vector<GCut> out;
  for (const auto& cand : candidates) {
    GCut c;
    c.cut = cand;
    if (detail::validate_gcut(adj, c.cut, c.comp1, c.comp2)) out.push_back(std::move(c));
  }
  for (auto& c : out)
    for (const auto& other : out) {
      if (other.cut.size() >= c.cut.size() || other.cut == c.cut) continue;
      if (std::includes(c.cut.begin(), c.cut.end(), other.cut.begin(), other.cut.end())) {
        c.inclusion_minimal = false;
        break;
      }
    }
  return out;
}

// Exhaustive oracle: every subset of vertices, validated against the
// definition. Exponential; for cross-checking at small sizes.
inline std::vector<GCut> exhaustive_gcuts(const Structure& a, int max_n = 15) {
  Structure g = gaifman_graph(a);
  if (g.n > max_n) throw limit_exceeded("exhaustive_gcuts: too many vertices");
  auto adj = graph_adjacency(g);
  std::vector<GCut> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << g.n); ++mask) {
    GCut c;
    for (int v = 0; v < g.n; ++v)
      if (mask >> v & 1) c.cut.push_back(v);
    if (detail::validate_gcut(adj, c.cut, c.comp1, c.comp2)) out.push_back(std::move(c));
  }
  for (auto& c : out)
    for (const auto& other : out) {
      if (other.cut.size() >= c.cut.size() || other.cut == c.cut) continue;
      if (std::includes(c.cut.begin(), c.cut.end(), other.cut.begin(), other.cut.end())) {
        c.inclusion_minimal = false;
        break;
      }
    }
  return out;
}

// Largest cut size across a family; 0 when no member has any cut.
inline int max_gcut_size(const std::vector<Structure>& family, const Limits& lim = {}) {
  if (family.empty()) throw std::invalid_argument("max_gcut_size: empty family");
  int best = 0;
  for (const Structure& f : family)
    for (const GCut& c : minimal_g_separating_cuts(f, lim))
      best = std::max(best, static_cast<int>(c.cut.size()));
  return best;
}

}  // namespace relc
