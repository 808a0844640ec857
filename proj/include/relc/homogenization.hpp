#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "relc/homogeneity.hpp"
#include "relc/limits.hpp"
#include "relc/perm.hpp"
#include "relc/structure.hpp"

namespace relc {

// One extended binary relation per occurring path distance d >= 2 (distance 1
// is the base edge relation). Connected graphs only.
inline Lift metric_lift(const Structure& g) {
  require_graph_view(g, "metric_lift");
  if (connected_components(g).size() > 1)
    throw std::invalid_argument("metric_lift: input must be connected");
  auto adj = graph_adjacency(g);
  std::map<int, TupleSet> by_dist;
  for (int v = 0; v < g.n; ++v) {
    auto dist = bfs_distances(adj, v);
    for (int w = 0; w < g.n; ++w)
      if (dist[w] >= 2) by_dist[dist[w]].push_back({v, w});
  }
  std::vector<int> arities;
  std::vector<std::string> names;
  std::vector<TupleSet> rels;
  for (auto& [d, ts] : by_dist) {
    arities.push_back(2);
    names.push_back("dist_" + std::to_string(d));
    rels.push_back(std::move(ts));
  }
  return Lift(g, Signature(std::move(arities), std::move(names)), std::move(rels));
}

namespace detail {

struct TreeSlots {
  std::vector<int> arities;
  std::vector<std::string> names;
  std::vector<TupleSet> rels;
  int total_vertices = 0;

  void add(int arity, std::string name, TupleSet ts) {
    normalize_tuple_set(ts);
    // a unary class covering every vertex carries no information
    if (arity == 1 && static_cast<int>(ts.size()) == total_vertices) return;
    arities.push_back(arity);
    names.push_back(std::move(name));
    rels.push_back(std::move(ts));
  }
};

// Induction on the diameter: strip the leaves, recolor every new leaf by the
// code of the rooted star it closed off (own color plus the multiset of its
// removed children's colors), homogenize the smaller tree, then re-attach the
// leaves through relations that tie each leaf class to its father's class:
//   u(i):  leaves whose father lies in unary class i,
//   b(i):  leaf pairs sharing a father in unary class i (both orientations),
//   b(j):  leaf pairs whose fathers are related by binary relation j,
//   bi(j): (leaf, inner) pairs whose (father, inner) pair lies in binary
//          relation j,
// with the stripped tree's edges mirrored as one of the binary relations.
//
// The bi(j) family is what pins a leaf's father once the tree gets deep: a
// partial map may pick a leaf and a far-away inner vertex without ever
// touching the father, and leaf-to-leaf relations alone leave such maps
// unconstrained (first visible on the 6-vertex path). Every added relation is
// equivariant, so the whole extension stays invariant under Aut of the tree.
inline void tree_homogenize_rec(const std::vector<std::vector<int>>& adj,
                                std::vector<int> alive, std::map<int, std::string> color,
                                int depth, TreeSlots& out) {
  auto color_classes = [&](const std::vector<int>& verts, const std::string& tag) {
    std::map<std::string, TupleSet> classes;
    for (int v : verts) classes[color.at(v)].push_back({v});
    int idx = 0;
    for (auto& [c, ts] : classes)
      out.add(1, "L" + std::to_string(depth) + "_" + tag + std::to_string(idx++), std::move(ts));
  };

  if (alive.size() <= 2) {
    color_classes(alive, "color");
    return;
  }

  std::vector<char> is_alive(adj.size(), 0);
  for (int v : alive) is_alive[v] = 1;
  auto alive_deg = [&](int v) {
    int d = 0;
    for (int w : adj[v]) d += is_alive[w];
    return d;
  };

  std::vector<int> leaves, rest;
  for (int v : alive)
    (alive_deg(v) <= 1 ? leaves : rest).push_back(v);

  std::vector<int> father(adj.size(), -1);
  std::vector<std::vector<int>> children(adj.size());
  for (int v : leaves)
    for (int w : adj[v])
      if (is_alive[w]) {
        father[v] = w;
        children[w].push_back(v);
      }

  // Recolor every vertex that closed off leaf children by the code of its
  // star: own color plus the multiset of removed children's colors. This
  // applies to inner vertices as well as new leaves; otherwise the stripped
  // tree forgets how many leaves hung off an inner vertex and acquires
  // spurious symmetry.
  std::vector<char> in_rest(adj.size(), 0);
  for (int v : rest) in_rest[v] = 1;
  std::map<int, std::string> next_color;
  for (int v : rest) {
    if (!children[v].empty()) {
      std::vector<std::string> kids;
      for (int c : children[v]) kids.push_back(color.at(c));
      std::sort(kids.begin(), kids.end());
      std::string code = "(" + color.at(v) + "|";
      for (const std::string& k : kids) code += k + ",";
      code += ")";
      next_color[v] = code;
    } else {
      next_color[v] = color.at(v);
    }
  }

  std::size_t before = out.arities.size();
  tree_homogenize_rec(adj, rest, next_color, depth + 1, out);

  // mirror the stripped tree's edges as an extended binary relation
  {
    TupleSet mirror;
    for (int v : rest)
      for (int w : adj[v])
        if (in_rest[w]) mirror.push_back({v, w});
    out.add(2, "L" + std::to_string(depth + 1) + "_mirror", std::move(mirror));
  }

  std::size_t after = out.arities.size();  // slots describing the stripped tree's lift

  // colors of the stripped leaves themselves
  color_classes(leaves, "leafcolor");

  // attachment relations derived from every slot of the stripped tree's lift
  for (std::size_t s = before; s < after; ++s) {
    if (out.arities[s] == 1) {
      std::vector<char> in_slot(adj.size(), 0);
      for (const Tuple& t : out.rels[s]) in_slot[t[0]] = 1;
      TupleSet u, b;
      for (int v : leaves)
        if (in_slot[father[v]]) {
          u.push_back({v});
          for (int w : leaves)
            if (w != v && father[w] == father[v] && in_slot[father[v]]) b.push_back({v, w});
        }
      out.add(1, "L" + std::to_string(depth) + "_u_" + out.names[s], std::move(u));
      out.add(2, "L" + std::to_string(depth) + "_b_" + out.names[s], std::move(b));
    } else {
      const TupleSet& slot = out.rels[s];
      TupleSet b, bi;
      for (int v : leaves)
        for (int w : leaves) {
          if (v == w || father[v] == father[w]) continue;
          Tuple f = {father[v], father[w]};
          if (std::binary_search(slot.begin(), slot.end(), f)) b.push_back({v, w});
        }
      for (int v : leaves)
        for (int u : rest) {
          if (std::binary_search(slot.begin(), slot.end(), Tuple{father[v], u}))
            bi.push_back({v, u});
          if (std::binary_search(slot.begin(), slot.end(), Tuple{u, father[v]}))
            bi.push_back({u, v});
        }
      out.add(2, "L" + std::to_string(depth) + "_b_" + out.names[s], std::move(b));
      out.add(2, "L" + std::to_string(depth) + "_bi_" + out.names[s], std::move(bi));
    }
  }
}

}  // namespace detail

// Homogenization of a (optionally vertex-colored) tree with extended arities
// <= 2, following the leaf-stripping induction. The input colors, when given,
// appear among the extended unary relations.
inline Lift tree_homogenize(const Structure& t,
                            const std::optional<std::vector<int>>& colors = std::nullopt) {
  require_graph_view(t, "tree_homogenize");
  if (t.n < 1) throw std::invalid_argument("tree_homogenize: tree must be nonempty");
  if (connected_components(t).size() != 1 ||
      t.rels[0].size() != 2u * static_cast<unsigned>(t.n - 1))
    throw std::invalid_argument("tree_homogenize: input is not a tree");
  if (colors && static_cast<int>(colors->size()) != t.n)
    throw std::invalid_argument("tree_homogenize: one color per vertex required");

  auto adj = graph_adjacency(t);
  std::vector<int> alive(t.n);
  std::iota(alive.begin(), alive.end(), 0);
  std::map<int, std::string> color;
  for (int v = 0; v < t.n; ++v)
    color[v] = colors ? "c" + std::to_string((*colors)[v]) : std::string("c");

  detail::TreeSlots slots;
  slots.total_vertices = t.n;
  detail::tree_homogenize_rec(adj, std::move(alive), std::move(color), 0, slots);
  return Lift(t, Signature(std::move(slots.arities), std::move(slots.names)),
              std::move(slots.rels));
}

// A lift witnesses a relational-complexity bound iff it is ultrahomogeneous
// and every extended relation is invariant, i.e. closed under every
// automorphism generator of the shadow (a union of orbits).
inline bool verify_rc_witness(const Lift& x, const Limits& lim = {}) {
  PermGroup aut = automorphism_group(x.base, lim);
  for (const auto& gen : aut.gens)
    for (int s = 0; s < x.ext_sig.size(); ++s)
      for (const Tuple& t : x.ext_rels[s]) {
        Tuple img = t;
        for (int& v : img) v = gen(v);
        if (!std::binary_search(x.ext_rels[s].begin(), x.ext_rels[s].end(), img)) return false;
      }
  return is_ultrahomogeneous(x, lim).ultrahomogeneous;
}

}  // namespace relc
