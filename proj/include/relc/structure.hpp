#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "relc/limits.hpp"

namespace relc {

using Tuple = std::vector<int>;
// Tuple sets are kept lexicographically sorted and duplicate-free; every
// operation that builds a Structure goes through normalize_tuple_set.
using TupleSet = std::vector<Tuple>;

inline void normalize_tuple_set(TupleSet& ts) {
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
}

// Relation symbols: one arity per slot, optionally named.
struct Signature {
  std::vector<int> arities;
  std::vector<std::string> names;  // empty, or one unique name per slot

  Signature() = default;
  explicit Signature(std::vector<int> ar, std::vector<std::string> nm = {})
      : arities(std::move(ar)), names(std::move(nm)) {
    validate();
  }

  int size() const { return static_cast<int>(arities.size()); }

  void validate() const {
    for (int a : arities)
      if (a < 1) throw std::invalid_argument("signature: every arity must be >= 1");
    if (!names.empty()) {
      if (names.size() != arities.size())
        throw std::invalid_argument("signature: names must match arity count");
      std::set<std::string> seen(names.begin(), names.end());
      if (seen.size() != names.size())
        throw std::invalid_argument("signature: slot names must be unique");
    }
  }

  bool operator==(const Signature& o) const { return arities == o.arities; }
  bool operator!=(const Signature& o) const { return !(*this == o); }
};

// A finite relational structure on vertices 0..n-1.
struct Structure {
  int n = 0;
  Signature sig;
  std::vector<TupleSet> rels;  // one sorted tuple set per slot

  Structure() = default;
  Structure(int n_, Signature sig_, std::vector<TupleSet> rels_)
      : n(n_), sig(std::move(sig_)), rels(std::move(rels_)) {
    normalize();
    validate();
  }

  void normalize() {
    for (auto& ts : rels) normalize_tuple_set(ts);
  }

  void validate() const {
    if (n < 0) throw std::invalid_argument("structure: negative vertex count");
    sig.validate();
    if (static_cast<int>(rels.size()) != sig.size())
      throw std::invalid_argument("structure: relation count does not match signature");
    for (int s = 0; s < sig.size(); ++s) {
      for (const Tuple& t : rels[s]) {
        if (static_cast<int>(t.size()) != sig.arities[s])
          throw std::invalid_argument("structure: tuple length differs from slot arity");
        for (int v : t)
          if (v < 0 || v >= n)
            throw std::invalid_argument("structure: tuple entry out of range");
      }
    }
  }

  bool has_tuple(int slot, const Tuple& t) const {
    const TupleSet& ts = rels[slot];
    return std::binary_search(ts.begin(), ts.end(), t);
  }

  std::uint64_t tuple_count() const {
    std::uint64_t c = 0;
    for (const auto& ts : rels) c += ts.size();
    return c;
  }

  bool operator==(const Structure& o) const {
    return n == o.n && sig == o.sig && rels == o.rels;
  }
  bool operator!=(const Structure& o) const { return !(*this == o); }
};

// A structure split into base slots and extended slots. shadow() drops the
// extension; combined() views everything as one plain structure.
struct Lift {
  Structure base;
  Signature ext_sig;
  std::vector<TupleSet> ext_rels;

  Lift() = default;
  explicit Lift(Structure b) : base(std::move(b)) {}
  Lift(Structure b, Signature es, std::vector<TupleSet> er)
      : base(std::move(b)), ext_sig(std::move(es)), ext_rels(std::move(er)) {
    for (auto& ts : ext_rels) normalize_tuple_set(ts);
    validate();
  }

  bool has_extension() const { return ext_sig.size() > 0; }
  const Structure& shadow() const { return base; }

  Structure combined() const {
    std::vector<int> ar = base.sig.arities;
    ar.insert(ar.end(), ext_sig.arities.begin(), ext_sig.arities.end());
    std::vector<std::string> nm;
    if (!base.sig.names.empty() || !ext_sig.names.empty()) {
      nm = base.sig.names.empty() ? default_slot_names(base.sig.size(), "r") : base.sig.names;
      std::vector<std::string> en =
          ext_sig.names.empty() ? default_slot_names(ext_sig.size(), "x") : ext_sig.names;
      nm.insert(nm.end(), en.begin(), en.end());
    }
    std::vector<TupleSet> rs = base.rels;
    rs.insert(rs.end(), ext_rels.begin(), ext_rels.end());
    return Structure(base.n, Signature(std::move(ar), std::move(nm)), std::move(rs));
  }

  void validate() const {
    base.validate();
    ext_sig.validate();
    if (static_cast<int>(ext_rels.size()) != ext_sig.size())
      throw std::invalid_argument("lift: extended relation count does not match signature");
    for (int s = 0; s < ext_sig.size(); ++s)
      for (const Tuple& t : ext_rels[s]) {
        if (static_cast<int>(t.size()) != ext_sig.arities[s])
          throw std::invalid_argument("lift: tuple length differs from slot arity");
        for (int v : t)
          if (v < 0 || v >= base.n)
            throw std::invalid_argument("lift: tuple entry out of range");
      }
  }

  static std::vector<std::string> default_slot_names(int k, const std::string& prefix) {
    std::vector<std::string> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) out.push_back(prefix + std::to_string(i));
    return out;
  }

  bool operator==(const Lift& o) const {
    return base == o.base && ext_sig == o.ext_sig && ext_rels == o.ext_rels;
  }
};

// Injective partial vertex map, kept sorted by source.
struct PartialMap {
  std::vector<std::pair<int, int>> pairs;

  PartialMap() = default;
  explicit PartialMap(std::vector<std::pair<int, int>> p) : pairs(std::move(p)) {
    std::sort(pairs.begin(), pairs.end());
    validate();
  }

  void validate() const {
    std::set<int> srcs, dsts;
    for (auto [s, d] : pairs) {
      if (!srcs.insert(s).second) throw std::invalid_argument("partial map: not functional");
      if (!dsts.insert(d).second) throw std::invalid_argument("partial map: not injective");
    }
  }

  int size() const { return static_cast<int>(pairs.size()); }

  std::optional<int> image_of(int v) const {
    for (auto [s, d] : pairs)
      if (s == v) return d;
    return std::nullopt;
  }
};

// ---------------------------------------------------------------------------
// Graph conventions. A graph is a structure with exactly one binary slot whose
// relation is irreflexive and symmetric (both orientations stored).

inline Structure make_graph(int n, const std::vector<std::pair<int, int>>& edges,
                            const std::string& slot_name = "edge") {
  TupleSet ts;
  ts.reserve(edges.size() * 2);
  for (auto [a, b] : edges) {
    if (a == b) throw std::invalid_argument("graph: loop edge");
    ts.push_back({a, b});
    ts.push_back({b, a});
  }
  return Structure(n, Signature({2}, {slot_name}), {std::move(ts)});
}

inline bool is_graph_view(const Structure& a, std::string* reason = nullptr) {
  auto fail = [&](const char* r) {
    if (reason) *reason = r;
    return false;
  };
  if (a.sig.size() != 1) return fail("not exactly one relation slot");
  if (a.sig.arities[0] != 2) return fail("slot is not binary");
  for (const Tuple& t : a.rels[0]) {
    if (t[0] == t[1]) return fail("relation has a loop");
    if (!a.has_tuple(0, {t[1], t[0]})) return fail("relation is not symmetric");
  }
  return true;
}

inline void require_graph_view(const Structure& a, const char* who) {
  std::string reason;
  if (!is_graph_view(a, &reason))
    throw std::invalid_argument(std::string(who) + ": input is not a graph (" + reason + ")");
}

inline std::vector<std::pair<int, int>> graph_edges(const Structure& g) {
  std::vector<std::pair<int, int>> out;
  for (const Tuple& t : g.rels[0])
    if (t[0] < t[1]) out.emplace_back(t[0], t[1]);
  return out;
}

// Adjacency lists of a graph-shaped structure (single binary slot assumed).
inline std::vector<std::vector<int>> graph_adjacency(const Structure& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (const Tuple& t : g.rels[0])
    if (t[0] != t[1]) adj[t[0]].push_back(t[1]);
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return adj;
}

// ---------------------------------------------------------------------------
// Elementary structure algebra.

// Restrict to the vertex set S (re-indexed by sorted order). Returns the
// substructure together with the sorted list of original vertices, so that
// result vertex i corresponds to mapping[i] in the input.
inline std::pair<Structure, std::vector<int>> induced_substructure(const Structure& a,
                                                                   std::vector<int> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int v : s)
    if (v < 0 || v >= a.n)
      throw std::invalid_argument("induced_substructure: vertex out of range");
  std::vector<int> pos(a.n, -1);
  for (int i = 0; i < static_cast<int>(s.size()); ++i) pos[s[i]] = i;

  std::vector<TupleSet> rels(a.sig.size());
  for (int slot = 0; slot < a.sig.size(); ++slot) {
    for (const Tuple& t : a.rels[slot]) {
      Tuple m;
      m.reserve(t.size());
      bool inside = true;
      for (int v : t) {
        if (pos[v] < 0) {
          inside = false;
          break;
        }
        m.push_back(pos[v]);
      }
      if (inside) rels[slot].push_back(std::move(m));
    }
  }
  return {Structure(static_cast<int>(s.size()), a.sig, std::move(rels)), std::move(s)};
}

inline Structure disjoint_union(const Structure& a, const Structure& b) {
  if (a.sig != b.sig) throw std::invalid_argument("disjoint_union: signature mismatch");
  std::vector<TupleSet> rels = a.rels;
  for (int slot = 0; slot < a.sig.size(); ++slot) {
    for (const Tuple& t : b.rels[slot]) {
      Tuple m = t;
      for (int& v : m) v += a.n;
      rels[slot].push_back(std::move(m));
    }
  }
  Signature sig = a.sig.names.empty() ? b.sig : a.sig;
  return Structure(a.n + b.n, sig, std::move(rels));
}

// Complement is defined for graphs only; general relational complementation
// is deliberately not offered.
inline Structure complement(const Structure& g) {
  require_graph_view(g, "complement");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (!g.has_tuple(0, {u, v})) edges.emplace_back(u, v);
  std::string name = g.sig.names.empty() ? std::string("edge") : g.sig.names[0];
  return make_graph(g.n, edges, name);
}

// Edge {x,y} present iff x != y and some tuple of some relation contains both.
inline Structure gaifman_graph(const Structure& a) {
  std::set<std::pair<int, int>> edges;
  for (const auto& ts : a.rels)
    for (const Tuple& t : ts)
      for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j)
          if (t[i] != t[j]) edges.emplace(std::min(t[i], t[j]), std::max(t[i], t[j]));
  return make_graph(a.n, {edges.begin(), edges.end()});
}

// Connected components of the Gaifman graph, each sorted, ordered by minimum
// vertex. For graphs this is the usual notion.
inline std::vector<std::vector<int>> connected_components(const Structure& a) {
  Structure g = is_graph_view(a) ? a : gaifman_graph(a);
  auto adj = graph_adjacency(g);
  std::vector<int> comp(a.n, -1);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < a.n; ++v) {
    if (comp[v] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(v);
    comp[v] = id;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      out[id].push_back(u);
      for (int w : adj[u])
        if (comp[w] < 0) {
          comp[w] = id;
          q.push(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

// BFS distances from src in a graph; -1 for unreachable.
inline std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int src) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

// Apply a relabeling (perm[old] = new) to every tuple. perm must be a
// bijection of 0..n-1.
inline Structure relabel(const Structure& a, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != a.n)
    throw std::invalid_argument("relabel: permutation degree mismatch");
  std::vector<TupleSet> rels(a.sig.size());
  for (int slot = 0; slot < a.sig.size(); ++slot) {
    rels[slot].reserve(a.rels[slot].size());
    for (const Tuple& t : a.rels[slot]) {
      Tuple m = t;
      for (int& v : m) v = perm[v];
      rels[slot].push_back(std::move(m));
    }
  }
  return Structure(a.n, a.sig, std::move(rels));
}

// A partial isomorphism of `a`: an injective partial map such that for every
// slot, a tuple over the domain is in the relation iff its image is.
inline bool is_partial_isomorphism(const Structure& a, const PartialMap& p) {
  std::vector<int> fwd(a.n, -1), bwd(a.n, -1);
  for (auto [s, d] : p.pairs) {
    if (s < 0 || s >= a.n || d < 0 || d >= a.n) return false;
    if (fwd[s] >= 0 || bwd[d] >= 0) return false;
    fwd[s] = d;
    bwd[d] = s;
  }
  for (int slot = 0; slot < a.sig.size(); ++slot) {
    for (const Tuple& t : a.rels[slot]) {
      // forward: tuple inside the domain must map into the relation
      bool in_dom = true;
      for (int v : t)
        if (fwd[v] < 0) {
          in_dom = false;
          break;
        }
      if (in_dom) {
        Tuple img = t;
        for (int& v : img) v = fwd[v];
        if (!a.has_tuple(slot, img)) return false;
      }
      // backward: tuple inside the image must pull back into the relation
      bool in_img = true;
      for (int v : t)
        if (bwd[v] < 0) {
          in_img = false;
          break;
        }
      if (in_img) {
        Tuple pre = t;
        for (int& v : pre) v = bwd[v];
        if (!a.has_tuple(slot, pre)) return false;
      }
    }
  }
  return true;
}

}  // namespace relc
