#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "relc/iso.hpp"
#include "relc/limits.hpp"
#include "relc/structure.hpp"

namespace relc {

namespace detail {

// Vertex order for morphism searches: descending Gaifman degree, ties by
// ascending index. Deterministic and prunes early.
inline std::vector<int> search_order(const Structure& a) {
  Structure g = gaifman_graph(a);
  auto adj = graph_adjacency(g);
  std::vector<int> order(a.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return adj[x].size() > adj[y].size(); });
  return order;
}

}  // namespace detail

// A (not necessarily injective) map carrying every tuple of f into a tuple
// of a; first one in the deterministic backtracking order, or nullopt.
inline std::optional<std::vector<int>> find_homomorphism(const Structure& f, const Structure& a,
                                                         const Limits& lim = {}) {
  if (f.sig != a.sig) throw std::invalid_argument("find_homomorphism: signature mismatch");
  if (f.n == 0) return std::vector<int>{};
  if (a.n == 0) return std::nullopt;

  detail::Incidence inc(f);
  std::vector<int> order = detail::search_order(f);
  std::vector<int> map(f.n, -1);
  Budget budget(lim.max_nodes, "homomorphism search");

  auto consistent = [&](int v, int w) {
    for (auto [slot, ti] : inc.at[v]) {
      const Tuple& t = f.rels[slot][ti];
      Tuple img(t.size());
      bool full = true;
      for (std::size_t i = 0; i < t.size(); ++i) {
        int m = (t[i] == v) ? w : map[t[i]];
        if (m < 0) {
          full = false;
          break;
        }
        img[i] = m;
      }
      if (full && !a.has_tuple(slot, img)) return false;
    }
    return true;
  };

  std::function<bool(int)> rec = [&](int idx) -> bool {
    if (idx == f.n) return true;
    int v = order[idx];
    for (int w = 0; w < a.n; ++w) {
      budget.spend();
      if (!consistent(v, w)) continue;
      map[v] = w;
      if (rec(idx + 1)) return true;
      map[v] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return map;
}

// Injective map that preserves AND reflects all relations: an isomorphism
// onto an induced substructure of b.
inline std::optional<std::vector<int>> find_embedding(const Structure& a, const Structure& b,
                                                      const Limits& lim = {}) {
  if (a.sig != b.sig) throw std::invalid_argument("find_embedding: signature mismatch");
  if (a.n > b.n) return std::nullopt;
  if (a.n == 0) return std::vector<int>{};

  detail::Incidence inca(a), incb(b);
  std::vector<int> order = detail::search_order(a);
  std::vector<int> map(a.n, -1), pre(b.n, -1);
  Budget budget(lim.max_nodes, "embedding search");

  auto consistent = [&](int v, int w) {
    for (auto [slot, ti] : inca.at[v]) {
      const Tuple& t = a.rels[slot][ti];
      Tuple img(t.size());
      bool full = true;
      for (std::size_t i = 0; i < t.size(); ++i) {
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
      Tuple back(t.size());
      bool full = true;
      for (std::size_t i = 0; i < t.size(); ++i) {
        int m = (t[i] == w) ? v : pre[t[i]];
        if (m < 0) {
          full = false;
          break;
        }
        back[i] = m;
      }
      if (full && !a.has_tuple(slot, back)) return false;
    }
    return true;
  };

  std::function<bool(int)> rec = [&](int idx) -> bool {
    if (idx == a.n) return true;
    int v = order[idx];
    for (int w = 0; w < b.n; ++w) {
      if (pre[w] >= 0) continue;
      budget.spend();
      if (!consistent(v, w)) continue;
      map[v] = w;
      pre[w] = v;
      if (rec(idx + 1)) return true;
      map[v] = -1;
      pre[w] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return map;
}

// True iff every homomorphism a -> a is an automorphism. Exhaustive
// endomorphism search; for a finite structure a bijective endomorphism is
// already an automorphism, so it suffices to rule out non-injective ones.
inline bool is_core(const Structure& a, const Limits& lim = {}) {
  if (a.n == 0) return true;
  detail::Incidence inc(a);
  std::vector<int> order = detail::search_order(a);
  std::vector<int> map(a.n, -1);
  std::vector<int> hits(a.n, 0);
  int collisions = 0;
  Budget budget(lim.max_nodes, "endomorphism search");

  auto consistent = [&](int v, int w) {
    for (auto [slot, ti] : inc.at[v]) {
      const Tuple& t = a.rels[slot][ti];
      Tuple img(t.size());
      bool full = true;
      for (std::size_t i = 0; i < t.size(); ++i) {
        int m = (t[i] == v) ? w : map[t[i]];
        if (m < 0) {
          full = false;
          break;
        }
        img[i] = m;
      }
      if (full && !a.has_tuple(slot, img)) return false;
    }
    return true;
  };

  // search for a non-injective endomorphism
  std::function<bool(int)> rec = [&](int idx) -> bool {
    if (idx == a.n) return collisions > 0;
    int v = order[idx];
    for (int w = 0; w < a.n; ++w) {
      budget.spend();
      if (!consistent(v, w)) continue;
      map[v] = w;
      if (hits[w]++) ++collisions;
      if (rec(idx + 1)) return true;
      map[v] = -1;
      if (--hits[w]) --collisions;
    }
    return false;
  };
  return !rec(0);
}

// ---------------------------------------------------------------------------
// Finitely presented hereditary classes.

enum class ClassKind { ForbiddenInduced, ForbiddenHom };

struct ClassSpec {
  ClassKind kind = ClassKind::ForbiddenInduced;
  std::vector<Structure> forbidden;
  std::optional<int> size_cap;

  ClassSpec() = default;
  ClassSpec(ClassKind k, std::vector<Structure> f, std::optional<int> cap = std::nullopt)
      : kind(k), forbidden(std::move(f)), size_cap(cap) {
    for (std::size_t i = 1; i < forbidden.size(); ++i)
      if (forbidden[i].sig != forbidden[0].sig)
        throw std::invalid_argument("class spec: forbidden structures must share a signature");
  }
};

// Membership: no forbidden structure embeds (induced) / maps homomorphically
// into a, and the optional size cap is respected.
inline bool is_member(const ClassSpec& spec, const Structure& a, const Limits& lim = {}) {
  if (spec.size_cap && a.n > *spec.size_cap) return false;
  for (const Structure& f : spec.forbidden) {
    if (f.sig != a.sig) throw std::invalid_argument("is_member: signature mismatch");
    bool found = spec.kind == ClassKind::ForbiddenInduced
                     ? find_embedding(f, a, lim).has_value()
                     : find_homomorphism(f, a, lim).has_value();
    if (found) return false;
  }
  return true;
}

// Every member is a core and no homomorphism joins two distinct members.
inline bool is_minimal_family(const std::vector<Structure>& fam, const Limits& lim = {}) {
  for (std::size_t i = 1; i < fam.size(); ++i)
    if (fam[i].sig != fam[0].sig)
      throw std::invalid_argument("is_minimal_family: signature mismatch");
  for (const Structure& f : fam)
    if (!is_core(f, lim)) return false;
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = 0; j < fam.size(); ++j)
      if (i != j && find_homomorphism(fam[i], fam[j], lim).has_value()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Bounded age enumeration.

struct AgeSet {
  int bound = 0;
  std::vector<Structure> representatives;  // canonical forms, pairwise non-isomorphic
};

// Canonical representatives of all isomorphism types of induced substructures
// with between 1 and `bound` vertices.
inline AgeSet age(const Structure& a, int bound, const Limits& lim = {}) {
  if (bound < 0) throw std::invalid_argument("age: bound must be >= 0");
  AgeSet out;
  out.bound = bound;
  std::map<CanonicalKey, Structure> types;
  std::vector<int> subset;
  std::function<void(int, int)> rec = [&](int start, int want) {
    if (want == 0) {
      auto [sub, mapping] = induced_substructure(a, subset);
      Structure canon = canonical_form_brute(sub, lim);
      types.emplace(encode_structure(canon), canon);
      return;
    }
    for (int v = start; v <= a.n - want; ++v) {
      subset.push_back(v);
      rec(v + 1, want - 1);
      subset.pop_back();
    }
  };
  for (int m = 1; m <= std::min(bound, a.n); ++m) rec(0, m);
  for (auto& [key, rep] : types) out.representatives.push_back(rep);
  std::stable_sort(out.representatives.begin(), out.representatives.end(),
                   [](const Structure& x, const Structure& y) { return x.n < y.n; });
  return out;
}

}  // namespace relc
