#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "relc/iso.hpp"
#include "relc/limits.hpp"
#include "relc/perm.hpp"
#include "relc/structure.hpp"

namespace relc {

struct UhWitness {
  PartialMap map;        // a partial isomorphism ...
  int stuck_vertex = -1;  // ... with no valid image for this source vertex
};

struct HomogeneityReport {
  bool ultrahomogeneous = false;
  std::optional<UhWitness> witness;
  std::uint64_t states = 0;  // partial isomorphisms processed
};

// Definitional re-check of a failure witness: the map is a partial
// isomorphism of `a`, the stuck vertex is outside its domain, and no
// candidate image yields a partial isomorphism.
inline bool verify_uh_witness(const Structure& a, const UhWitness& w) {
  if (!is_partial_isomorphism(a, w.map)) return false;
  if (w.stuck_vertex < 0 || w.stuck_vertex >= a.n) return false;
  std::vector<char> in_dom(a.n, 0), in_img(a.n, 0);
  for (auto [s, d] : w.map.pairs) {
    in_dom[s] = 1;
    in_img[d] = 1;
  }
  if (in_dom[w.stuck_vertex]) return false;
  for (int cand = 0; cand < a.n; ++cand) {
    if (in_img[cand]) continue;
    auto pairs = w.map.pairs;
    pairs.emplace_back(w.stuck_vertex, cand);
    if (is_partial_isomorphism(a, PartialMap(std::move(pairs)))) return false;
  }
  return true;
}

namespace detail {

// For finite structures, ultrahomogeneity is equivalent to the one-point
// extension property: every partial isomorphism p and vertex v outside its
// domain admit some w with p + (v -> w) a partial isomorphism. (Extending
// point by point turns any partial isomorphism into a total one, and a total
// bijection that preserves and reflects every relation is an automorphism;
// conversely restrictions of automorphisms extend trivially.)
//
// The search runs breadth-first over partial isomorphisms by domain size,
// deduplicating states and, when the automorphism group is available,
// canonizing the domain side: replacing each state p by p O alpha for an
// automorphism alpha moving the domain to a fixed orbit representative.
// Extendability at (p, v) is invariant under such composition, so the
// verdict and the reachability argument survive the quotient.

struct PackedUhCodec {
  static constexpr bool packed = true;
  using StateKey = std::pair<std::uint64_t, std::uint64_t>;
  using Pattern = std::int64_t;

  struct KeyHash {
    std::size_t operator()(const StateKey& k) const {
      std::uint64_t x = k.first * 0x9e3779b97f4a7c15ull ^ (k.second + 0x7f4a7c15u);
      x ^= x >> 33;
      x *= 0xff51afd7ed558ccdull;
      x ^= x >> 33;
      return static_cast<std::size_t>(x);
    }
  };

  static bool applicable(const Structure& a) {
    if (a.n > 16 || a.sig.size() >= 65535) return false;
    for (int ar : a.sig.arities)
      if (ar > 9) return false;
    return true;
  }

  static StateKey encode(const std::vector<int>& dom, const std::vector<int>& img) {
    std::uint64_t mask = 0, im = 0;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      mask |= std::uint64_t{1} << dom[i];
      im |= static_cast<std::uint64_t>(img[i]) << (4 * i);
    }
    return {mask, im};
  }

  static void decode(const StateKey& k, std::vector<int>& dom, std::vector<int>& img) {
    dom.clear();
    img.clear();
    std::uint64_t mask = k.first;
    int i = 0;
    while (mask) {
      int v = __builtin_ctzll(mask);
      mask &= mask - 1;
      dom.push_back(v);
      img.push_back(static_cast<int>(k.second >> (4 * i) & 15));
      ++i;
    }
  }

  // slot in the high bits, then one 5-bit field per tuple position
  static Pattern make_pattern(int slot, const int* pos, int arity) {
    std::int64_t key = slot + 1;
    for (int i = 0; i < arity; ++i) key = (key << 5) | (pos[i] + 1);
    return key;
  }
};

struct GenericUhCodec {
  static constexpr bool packed = false;
  using StateKey = std::string;
  using Pattern = std::vector<int>;

  struct KeyHash {
    std::size_t operator()(const StateKey& k) const { return std::hash<std::string>{}(k); }
  };

  static bool applicable(const Structure& a) {
    if (a.n > 255) return false;
    for (int ar : a.sig.arities)
      if (ar > 64) return false;
    return true;
  }

  static StateKey encode(const std::vector<int>& dom, const std::vector<int>& img) {
    StateKey k;
    k.reserve(dom.size() * 2);
    for (int v : dom) k.push_back(static_cast<char>(v));
    for (int v : img) k.push_back(static_cast<char>(v));
    return k;
  }

  static void decode(const StateKey& k, std::vector<int>& dom, std::vector<int>& img) {
    dom.clear();
    img.clear();
    std::size_t half = k.size() / 2;
    for (std::size_t i = 0; i < half; ++i) dom.push_back(static_cast<unsigned char>(k[i]));
    for (std::size_t i = half; i < k.size(); ++i) img.push_back(static_cast<unsigned char>(k[i]));
  }

  static Pattern make_pattern(int slot, const int* pos, int arity) {
    Pattern p(arity + 1);
    p[0] = slot;
    for (int i = 0; i < arity; ++i) p[i + 1] = pos[i];
    return p;
  }
};

template <class Codec>
HomogeneityReport uh_engine(const Structure& a, const Limits& lim, const PermGroup* aut) {
  const int n = a.n;
  HomogeneityReport rep;
  Incidence inc(a);
  Budget budget(lim.max_nodes, "ultrahomogeneity search");

  // Domain-orbit canonization table over vertex-set bitmasks (n <= 16 only).
  bool canon = false;
  std::vector<std::uint32_t> canon_mask;
  std::vector<std::array<std::uint8_t, 16>> from_canon;  // perm mapping canon set -> mask set
  if (Codec::packed && n <= 16 && aut && !aut->gens.empty()) {
    canon = true;
    std::size_t total = std::size_t{1} << n;
    canon_mask.assign(total, UINT32_MAX);
    from_canon.resize(total);
    std::vector<std::uint32_t> stack;
    for (std::uint32_t seed = 0; seed < total; ++seed) {
      if (canon_mask[seed] != UINT32_MAX) continue;
      canon_mask[seed] = seed;
      for (int v = 0; v < n; ++v) from_canon[seed][v] = static_cast<std::uint8_t>(v);
      stack.assign(1, seed);
      while (!stack.empty()) {
        std::uint32_t cur = stack.back();
        stack.pop_back();
        for (const auto& g : aut->gens) {
          std::uint32_t img = 0;
          for (std::uint32_t m = cur; m;) {
            int v = __builtin_ctz(m);
            m &= m - 1;
            img |= std::uint32_t{1} << g(v);
          }
          if (canon_mask[img] == UINT32_MAX) {
            canon_mask[img] = seed;
            for (int v = 0; v < n; ++v)
              from_canon[img][v] = static_cast<std::uint8_t>(g(from_canon[cur][v]));
            stack.push_back(img);
          }
        }
      }
    }
  }

  using Key = typename Codec::StateKey;
  std::unordered_set<Key, typename Codec::KeyHash> visited;
  std::deque<Key> queue;
  {
    Key root = Codec::encode({}, {});
    visited.insert(root);
    queue.push_back(root);
  }

  std::vector<int> dom, img, pos_d(n, -1), pos_i(n, -1), map_of(n, -1);
  std::vector<std::vector<typename Codec::Pattern>> dom_prof(n), img_prof(n);
  int pat_pos[64];

  // Patterns of x over the side described by pos[] (position array with
  // pos[x] set to the domain size): one entry per tuple of `a` lying inside
  // side-set + {x} and containing x.
  auto patterns_of = [&](int x, std::vector<int>& pos, int k,
                         std::vector<typename Codec::Pattern>& out) {
    out.clear();
    pos[x] = k;
    for (auto [slot, ti] : inc.at[x]) {
      const Tuple& t = a.rels[slot][ti];
      bool inside = true;
      for (std::size_t i = 0; i < t.size(); ++i) {
        int p = pos[t[i]];
        if (p < 0) {
          inside = false;
          break;
        }
        pat_pos[i] = p;
      }
      if (inside)
        out.push_back(Codec::make_pattern(slot, pat_pos, static_cast<int>(t.size())));
    }
    pos[x] = -1;
    std::sort(out.begin(), out.end());
  };

  while (!queue.empty()) {
    Key key = queue.front();
    queue.pop_front();
    Codec::decode(key, dom, img);
    const int k = static_cast<int>(dom.size());
    ++rep.states;
    budget.spend();

    for (int i = 0; i < k; ++i) {
      pos_d[dom[i]] = i;
      pos_i[img[i]] = i;
    }

    // profiles of all candidate vertices on both sides
    for (int v = 0; v < n; ++v) {
      if (pos_d[v] < 0) patterns_of(v, pos_d, k, dom_prof[v]);
      if (pos_i[v] < 0) patterns_of(v, pos_i, k, img_prof[v]);
    }

    bool failed = false;
    int fail_v = -1;
    for (int v = 0; v < n && !failed; ++v) {
      if (pos_d[v] >= 0) continue;
      bool any = false;
      for (int w = 0; w < n; ++w) {
        if (pos_i[w] >= 0) continue;
        if (dom_prof[v] != img_prof[w]) continue;
        any = true;
        if (k + 1 == n) continue;  // full extension next step is an automorphism
        // child state: insert (v, w) at v's sorted position
        auto it = std::lower_bound(dom.begin(), dom.end(), v);
        int at = static_cast<int>(it - dom.begin());
        std::vector<int> cdom = dom, cimg = img;
        cdom.insert(cdom.begin() + at, v);
        cimg.insert(cimg.begin() + at, w);
        if (canon) {
          std::uint32_t cmask = 0;
          for (int u : cdom) cmask |= std::uint32_t{1} << u;
          if (canon_mask[cmask] != cmask) {
            for (int i = 0; i <= k; ++i) map_of[cdom[i]] = cimg[i];
            const auto& alpha = from_canon[cmask];
            std::uint32_t target = canon_mask[cmask];
            int i = 0;
            for (std::uint32_t m = target; m; ++i) {
              int u = __builtin_ctz(m);
              m &= m - 1;
              cdom[i] = u;
              cimg[i] = map_of[alpha[u]];
            }
          }
        }
        Key ck = Codec::encode(cdom, cimg);
        if (visited.insert(ck).second) {
          budget.spend();
          queue.push_back(ck);
        }
      }
      if (!any) {
        failed = true;
        fail_v = v;
      }
    }

    if (failed) {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < k; ++i) pairs.emplace_back(dom[i], img[i]);
      UhWitness w{PartialMap(std::move(pairs)), fail_v};
      if (!verify_uh_witness(a, w))
        throw std::logic_error("ultrahomogeneity search produced an invalid witness");
      rep.ultrahomogeneous = false;
      rep.witness = std::move(w);
      return rep;
    }

    for (int i = 0; i < k; ++i) {
      pos_d[dom[i]] = -1;
      pos_i[img[i]] = -1;
    }
  }

  rep.ultrahomogeneous = true;
  return rep;
}

}  // namespace detail

// Decide ultrahomogeneity; on failure the report carries a re-verified
// witness. `aut_hint` may supply already-known automorphism generators (they
// are validated); otherwise the group is computed when the instance is small
// enough for domain canonization to pay off.
inline HomogeneityReport is_ultrahomogeneous(const Structure& a, const Limits& lim = {},
                                             const PermGroup* aut_hint = nullptr) {
  PermGroup own;
  const PermGroup* aut = nullptr;
  if (a.n <= 16) {
    if (aut_hint) {
      for (const auto& g : aut_hint->gens)
        if (!is_automorphism(a, g))
          throw std::logic_error("is_ultrahomogeneous: invalid automorphism hint");
      aut = aut_hint;
    } else {
      own = automorphism_group(a, lim);
      aut = &own;
    }
  }
  if (detail::PackedUhCodec::applicable(a))
    return detail::uh_engine<detail::PackedUhCodec>(a, lim, aut);
  if (!detail::GenericUhCodec::applicable(a))
    throw limit_exceeded("ultrahomogeneity: structure too large");
  return detail::uh_engine<detail::GenericUhCodec>(a, lim, aut);
}

inline HomogeneityReport is_ultrahomogeneous(const Lift& x, const Limits& lim = {},
                                             const PermGroup* aut_hint = nullptr) {
  return is_ultrahomogeneous(x.combined(), lim, aut_hint);
}

// ---------------------------------------------------------------------------
// Independent ground-truth oracle: enumerate every partial isomorphism and
// test that each extends to a full automorphism (a total map that is a
// partial isomorphism with full domain *is* one). Exponential; guarded by a
// size bound.
inline bool brute_force_uh(const Structure& a, int max_n = 6, const Limits& lim = {}) {
  if (a.n > max_n) throw std::invalid_argument("brute_force_uh: size bound exceeded");
  const int n = a.n;
  detail::Incidence inc(a);
  Budget budget(lim.max_nodes, "brute-force ultrahomogeneity");

  std::vector<int> fwd(n, -1), bwd(n, -1);

  // Adding (v, w) keeps the map a partial isomorphism?
  auto valid = [&](int v, int w) {
    for (auto [slot, ti] : inc.at[v]) {
      const Tuple& t = a.rels[slot][ti];
      Tuple m(t.size());
      bool full = true;
      for (std::size_t i = 0; i < t.size(); ++i) {
        int u = t[i];
        int mu = (u == v) ? w : fwd[u];
        if (mu < 0) {
          full = false;
          break;
        }
        m[i] = mu;
      }
      if (full && !a.has_tuple(slot, m)) return false;
    }
    for (auto [slot, ti] : inc.at[w]) {
      const Tuple& t = a.rels[slot][ti];
      Tuple m(t.size());
      bool full = true;
      for (std::size_t i = 0; i < t.size(); ++i) {
        int u = t[i];
        int mu = (u == w) ? v : bwd[u];
        if (mu < 0) {
          full = false;
          break;
        }
        m[i] = mu;
      }
      if (full && !a.has_tuple(slot, m)) return false;
    }
    return true;
  };

  // Can the current partial isomorphism be extended to a total one?
  std::function<bool(int)> extends_total = [&](int assigned) -> bool {
    if (assigned == n) return true;
    int v = 0;
    while (fwd[v] >= 0) ++v;
    for (int w = 0; w < n; ++w) {
      if (bwd[w] >= 0) continue;
      budget.spend();
      if (!valid(v, w)) continue;
      fwd[v] = w;
      bwd[w] = v;
      bool ok = extends_total(assigned + 1);
      fwd[v] = -1;
      bwd[w] = -1;
      if (ok) return true;
    }
    return false;
  };

  // Enumerate all partial isomorphisms, domains as increasing sequences.
  std::function<bool(int, int)> enumerate = [&](int last, int assigned) -> bool {
    if (!extends_total(assigned)) return false;
    for (int v = last + 1; v < n; ++v) {
      for (int w = 0; w < n; ++w) {
        if (bwd[w] >= 0) continue;
        budget.spend();
        if (!valid(v, w)) continue;
        fwd[v] = w;
        bwd[w] = v;
        bool ok = enumerate(v, assigned + 1);
        fwd[v] = -1;
        bwd[w] = -1;
        if (!ok) return false;
      }
    }
    return true;
  };

  return enumerate(-1, 0);
}

inline bool brute_force_uh(const Lift& x, int max_n = 6, const Limits& lim = {}) {
  return brute_force_uh(x.combined(), max_n, lim);
}

}  // namespace relc
