#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "relc/iso.hpp"
#include "relc/limits.hpp"
#include "relc/structure.hpp"

namespace relc {

struct Permutation {
  std::vector<int> img;

  Permutation() = default;
  explicit Permutation(std::vector<int> image) : img(std::move(image)) { validate(); }

  static Permutation identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
  }

  void validate() const {
    std::vector<char> seen(img.size(), 0);
    for (int v : img) {
      if (v < 0 || v >= static_cast<int>(img.size()) || seen[v])
        throw std::invalid_argument("permutation: image is not a bijection");
      seen[v] = 1;
    }
  }

  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int v) const { return img[v]; }

  bool is_identity() const {
    for (int v = 0; v < degree(); ++v)
      if (img[v] != v) return false;
    return true;
  }

  // (a.then(b))(v) = b(a(v))
  Permutation then(const Permutation& b) const {
    std::vector<int> im(img.size());
    for (std::size_t v = 0; v < img.size(); ++v) im[v] = b.img[img[v]];
    return Permutation(std::move(im));
  }

  Permutation inverse() const {
    std::vector<int> im(img.size());
    for (std::size_t v = 0; v < img.size(); ++v) im[img[v]] = static_cast<int>(v);
    return Permutation(std::move(im));
  }

  bool operator==(const Permutation& o) const { return img == o.img; }
  bool operator<(const Permutation& o) const { return img < o.img; }
};

// A permutation group given by generators on {0..degree-1}. The identity-only
// group has an empty generator list.
struct PermGroup {
  int degree = 0;
  std::vector<Permutation> gens;

  PermGroup() = default;
  PermGroup(int degree_, std::vector<Permutation> gens_)
      : degree(degree_), gens(std::move(gens_)) {
    for (const auto& g : gens)
      if (g.degree() != degree) throw std::invalid_argument("group: generator degree mismatch");
  }
};

// ---------------------------------------------------------------------------
// Automorphism groups.

// True iff perm is an automorphism of a (preserves and reflects every slot).
inline bool is_automorphism(const Structure& a, const Permutation& p) {
  if (p.degree() != a.n) return false;
  for (int slot = 0; slot < a.sig.size(); ++slot)
    for (const Tuple& t : a.rels[slot]) {
      Tuple m = t;
      for (int& v : m) v = p(v);
      if (!a.has_tuple(slot, m)) return false;
    }
  // a bijection preserving every finite tuple set also reflects it
  return true;
}

// Generators for Aut(a): stabilizer-chain coset representatives. For each
// level i we search, by backtracking, for automorphisms fixing 0..i-1
// pointwise and moving i to each point not yet reachable from i at this
// level; the union of all found representatives generates the full group.
inline PermGroup automorphism_group(const Structure& a, const Limits& lim = {}) {
  std::vector<Permutation> gens;
  for (int i = 0; i < a.n; ++i) {
    std::vector<char> reach(a.n, 0);
    reach[i] = 1;
    // points reachable from i under generators fixing 0..i-1 (all generators
    // found at levels >= i do)
    auto close_reach = [&]() {
      bool changed = true;
      while (changed) {
        changed = false;
        for (const auto& g : gens) {
          bool fixes_prefix = true;
          for (int v = 0; v < i; ++v)
            if (g(v) != v) {
              fixes_prefix = false;
              break;
            }
          if (!fixes_prefix) continue;
          for (int v = 0; v < a.n; ++v)
            if (reach[v] && !reach[g(v)]) {
              reach[g(v)] = 1;
              changed = true;
            }
        }
      }
    };
    close_reach();
    // an automorphism fixing 0..i-1 pointwise can only move i upward
    for (int j = i + 1; j < a.n; ++j) {
      if (reach[j]) continue;
      std::vector<std::pair<int, int>> pinned;
      for (int v = 0; v < i; ++v) pinned.emplace_back(v, v);
      pinned.emplace_back(i, j);
      std::optional<std::vector<int>> found;
      detail::for_each_isomorphism(
          a, a,
          [&](const std::vector<int>& m) {
            found = m;
            return true;
          },
          lim, pinned);
      if (found) {
        gens.emplace_back(*found);
        close_reach();
      }
    }
  }
  return PermGroup(a.n, std::move(gens));
}

// ---------------------------------------------------------------------------
// Group closure.

// All elements of the generated group in breadth-first discovery order
// (identity first). Throws once more than cap elements appear.
inline std::vector<Permutation> group_elements(const PermGroup& g, std::uint64_t cap) {
  if (cap < 1) throw std::invalid_argument("group closure: cap must be >= 1");
  std::vector<Permutation> elems;
  std::set<std::vector<int>> seen;
  std::deque<Permutation> frontier;
  Permutation id = Permutation::identity(g.degree);
  seen.insert(id.img);
  elems.push_back(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation cur = frontier.front();
    frontier.pop_front();
    for (const auto& gen : g.gens) {
      Permutation next = cur.then(gen);
      if (seen.insert(next.img).second) {
        if (elems.size() + 1 > cap) throw limit_exceeded("group closure: cap exceeded");
        elems.push_back(next);
        frontier.push_back(next);
      }
    }
  }
  return elems;
}

inline std::uint64_t group_order(const PermGroup& g, std::uint64_t cap) {
  return group_elements(g, cap).size();
}

// ---------------------------------------------------------------------------
// Orbits on tuples.

struct OrbitPartition {
  int arity = 0;
  bool injective = true;
  std::vector<Tuple> tuples;    // all tuples, lexicographic
  std::vector<int> orbit_id;    // aligned with tuples
  int orbit_count = 0;
  std::vector<Tuple> reps;      // lexicographically least member per orbit

  std::optional<int> orbit_of(const Tuple& t) const {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
    if (it == tuples.end() || *it != t) return std::nullopt;
    return orbit_id[it - tuples.begin()];
  }

  std::vector<TupleSet> orbit_members() const {
    std::vector<TupleSet> out(orbit_count);
    for (std::size_t i = 0; i < tuples.size(); ++i) out[orbit_id[i]].push_back(tuples[i]);
    return out;  // sorted: tuples are enumerated in lex order
  }
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
};

inline std::vector<Tuple> enumerate_tuples(int n, int k, bool injective, const Limits& lim) {
  double rough = 1;
  for (int i = 0; i < k; ++i) rough *= injective ? std::max(n - i, 0) : n;
  if (rough > static_cast<double>(lim.max_tuples))
    throw limit_exceeded("orbit computation: tuple count exceeds limit");
  std::vector<Tuple> out;
  Tuple t(k);
  std::vector<char> used(n, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == k) {
      out.push_back(t);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (injective && used[v]) continue;
      t[pos] = v;
      used[v] = 1;
      rec(pos + 1);
      used[v] = 0;
    }
  };
  if (k > 0 && (n > 0 || k == 0)) rec(0);
  if (k == 0) out.push_back({});
  return out;
}

}  // namespace detail

// Partition of all (injective) k-tuples over 0..degree-1 into orbits of the
// generated group, computed by closure under generator images; the group
// itself is never enumerated. Orbit ids run 0..count-1 ordered by canonical
// (lexicographically least) representatives.
inline OrbitPartition orbits_on_tuples(const PermGroup& g, int k, bool injective,
                                       const Limits& lim = {}) {
  if (k < 1) throw std::invalid_argument("orbits: arity must be >= 1");
  if (injective && g.degree < k)
    throw std::invalid_argument("orbits: degree smaller than injective arity");
  OrbitPartition out;
  out.arity = k;
  out.injective = injective;
  out.tuples = detail::enumerate_tuples(g.degree, k, injective, lim);

  // index lookup: tuples are in lex order, so binary search suffices
  auto index_of = [&](const Tuple& t) {
    return static_cast<int>(
        std::lower_bound(out.tuples.begin(), out.tuples.end(), t) - out.tuples.begin());
  };

  detail::UnionFind uf(out.tuples.size());
  Tuple img(k);
  for (std::size_t i = 0; i < out.tuples.size(); ++i)
    for (const auto& gen : g.gens) {
      for (int p = 0; p < k; ++p) img[p] = gen(out.tuples[i][p]);
      uf.unite(static_cast<int>(i), index_of(img));
    }

  out.orbit_id.assign(out.tuples.size(), -1);
  std::unordered_map<int, int> root_to_id;
  for (std::size_t i = 0; i < out.tuples.size(); ++i) {
    int root = uf.find(static_cast<int>(i));
    auto it = root_to_id.find(root);
    if (it == root_to_id.end()) {
      it = root_to_id.emplace(root, out.orbit_count++).first;
      out.reps.push_back(out.tuples[i]);
    }
    out.orbit_id[i] = it->second;
  }
  return out;
}

// True iff the injective k-tuples form a single orbit.
inline bool is_k_transitive(const PermGroup& g, int k, const Limits& lim = {}) {
  if (k < 1 || k > g.degree) throw std::invalid_argument("is_k_transitive: need 1 <= k <= degree");
  return orbits_on_tuples(g, k, true, lim).orbit_count == 1;
}

}  // namespace relc
