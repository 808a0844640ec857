#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "relc/iso.hpp"
#include "relc/limits.hpp"
#include "relc/perm.hpp"
#include "relc/structure.hpp"

namespace relc {
namespace gen {

inline Structure complete(int n) {
  if (n < 0) throw std::invalid_argument("complete: n must be >= 0");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make_graph(n, e);
}

inline Structure cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make_graph(n, e);
}

inline Structure path(int n) {
  if (n < 1) throw std::invalid_argument("path: n must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

inline Structure empty_graph(int n) {
  if (n < 0) throw std::invalid_argument("empty: n must be >= 0");
  return make_graph(n, {});
}

// Parts are consecutive vertex ranges; edges join different parts.
inline Structure complete_multipartite(const std::vector<int>& part_sizes) {
  int n = 0;
  std::vector<int> part;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] < 1)
      throw std::invalid_argument("complete_multipartite: part sizes must be >= 1");
    for (int i = 0; i < part_sizes[p]; ++i) part.push_back(static_cast<int>(p));
    n += part_sizes[p];
  }
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part[i] != part[j]) e.emplace_back(i, j);
  return make_graph(n, e);
}

inline Structure disjoint_copies(int m, const Structure& base) {
  if (m < 1) throw std::invalid_argument("disjoint_copies: m must be >= 1");
  Structure out = base;
  for (int i = 1; i < m; ++i) out = disjoint_union(out, base);
  return out;
}

inline Structure matching(int m) { return disjoint_copies(m, complete(2)); }

// Outer 5-cycle, inner pentagram, spokes.
inline Structure petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, 5 + i);
  }
  return make_graph(10, e);
}

// k-subsets of {0..n-1} in colexicographic order.
inline std::vector<std::vector<int>> k_subsets_colex(int n, int k) {
  std::vector<std::vector<int>> subs;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int start, int want) {
    if (want == 0) {
      subs.push_back(cur);
      return;
    }
    for (int v = start; v <= n - want; ++v) {
      cur.push_back(v);
      rec(v + 1, want - 1);
      cur.pop_back();
    }
  };
  rec(0, k);
  std::sort(subs.begin(), subs.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  return subs;
}

// Vertices are k-subsets (colex order); edges join disjoint subsets.
inline Structure kneser(int n, int k) {
  if (k < 1 || n < k) throw std::invalid_argument("kneser: need n >= k >= 1");
  auto subs = k_subsets_colex(n, k);
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      bool disjoint = true;
      for (int x : subs[i])
        if (std::find(subs[j].begin(), subs[j].end(), x) != subs[j].end()) {
          disjoint = false;
          break;
        }
      if (disjoint) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return make_graph(static_cast<int>(subs.size()), e);
}

// Vertices are k-subsets (colex order); edges join subsets meeting in k-1
// elements.
inline Structure johnson(int n, int k) {
  if (k < 1 || n < k) throw std::invalid_argument("johnson: need n >= k >= 1");
  auto subs = k_subsets_colex(n, k);
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      int common = 0;
      for (int x : subs[i])
        if (std::find(subs[j].begin(), subs[j].end(), x) != subs[j].end()) ++common;
      if (common == k - 1) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return make_graph(static_cast<int>(subs.size()), e);
}

// Line graph of K(3,3): vertex (r,c) -> 3r + c, adjacency by shared row or
// column (the 3x3 rook's graph).
inline Structure line_graph_k33() {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < 9; ++a)
    for (int b = a + 1; b < 9; ++b)
      if (a / 3 == b / 3 || a % 3 == b % 3) e.emplace_back(a, b);
  return make_graph(9, e);
}

// ---------------------------------------------------------------------------
// Cograph terms: K1 | union(e1,...,ek) | complement(e).

namespace detail {

struct CographParser {
  const std::string& text;
  std::size_t pos = 0;

  explicit CographParser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(const std::string& word) {
    skip_ws();
    if (text.compare(pos, word.size(), word) == 0) {
      pos += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw std::invalid_argument(std::string("cograph term: expected '") + c + "' at offset " +
                                  std::to_string(pos));
    ++pos;
  }

  Structure parse_expr() {
    skip_ws();
    if (eat("K1")) return complete(1);
    if (eat("union")) {
      expect('(');
      Structure acc = parse_expr();
      skip_ws();
      int terms = 1;
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        acc = disjoint_union(acc, parse_expr());
        ++terms;
        skip_ws();
      }
      if (terms < 2) throw std::invalid_argument("cograph term: union needs >= 2 operands");
      expect(')');
      return acc;
    }
    if (eat("complement")) {
      expect('(');
      Structure inner = parse_expr();
      expect(')');
      return complement(inner);
    }
    throw std::invalid_argument("cograph term: expected K1, union(...) or complement(...) at offset " +
                                std::to_string(pos));
  }

  Structure parse() {
    Structure out = parse_expr();
    skip_ws();
    if (pos != text.size())
      throw std::invalid_argument("cograph term: trailing input at offset " + std::to_string(pos));
    return out;
  }
};

}  // namespace detail

inline Structure cograph(const std::string& expr) { return detail::CographParser(expr).parse(); }

// ---------------------------------------------------------------------------
// The control-and-paths gadget of a permutation group: n control vertices,
// and for every group element p a path on n+1 vertices whose a-th vertex
// (a = 0..n-1) is attached to control p(a). Group elements are taken in
// closure-discovery order, identity first.
inline Structure permutation_graph(const PermGroup& gamma, std::uint64_t cap = 100000) {
  std::vector<Permutation> elems = group_elements(gamma, cap);
  int n = gamma.degree;
  int total = n + static_cast<int>(elems.size()) * (n + 1);
  std::vector<std::pair<int, int>> e;
  for (std::size_t idx = 0; idx < elems.size(); ++idx) {
    int base = n + static_cast<int>(idx) * (n + 1);
    for (int a = 0; a < n; ++a) e.emplace_back(base + a, base + a + 1);
    for (int a = 0; a < n; ++a) e.emplace_back(base + a, elems[idx](a));
  }
  return make_graph(total, e);
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of small graphs and trees, one representative per
// isomorphism type, in deterministic (canonical-key) order.

inline std::vector<Structure> enumerate_graphs(int n, int hard_cap = 8) {
  if (n < 1 || n > hard_cap) throw limit_exceeded("enumerate_graphs: vertex count out of range");
  std::vector<Structure> level = {complete(1)};
  for (int m = 2; m <= n; ++m) {
    std::map<CanonicalKey, Structure> next;
    for (const Structure& g : level) {
      for (std::uint32_t nb = 0; nb < (std::uint32_t{1} << (m - 1)); ++nb) {
        auto edges = graph_edges(g);
        for (int v = 0; v < m - 1; ++v)
          if (nb >> v & 1) edges.emplace_back(v, m - 1);
        Structure h = make_graph(m, edges);
        next.emplace(canonical_key(h), std::move(h));
      }
    }
    level.clear();
    for (auto& [key, g] : next) level.push_back(std::move(g));
  }
  return level;
}

// Independent oracle for enumerate_graphs at tiny sizes: every edge mask,
// deduplicated with the exact permutation-minimal canonical form.
inline std::vector<Structure> enumerate_graphs_bitmask(int n) {
  if (n < 1 || n > 6) throw limit_exceeded("enumerate_graphs_bitmask: n must be <= 6");
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
  std::map<CanonicalKey, Structure> types;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << all.size()); ++mask) {
    std::vector<std::pair<int, int>> e;
    for (std::size_t b = 0; b < all.size(); ++b)
      if (mask >> b & 1) e.push_back(all[b]);
    Structure g = make_graph(n, e);
    types.emplace(encode_structure(canonical_form_brute(g)), std::move(g));
  }
  std::vector<Structure> out;
  for (auto& [key, g] : types) out.push_back(std::move(g));
  return out;
}

// Canonical code of a tree: rooted subtree codes "(" + sorted children + ")",
// evaluated at the centroid of the unique 1- or 2-vertex center.
inline std::string tree_code(const Structure& t) {
  auto adj = graph_adjacency(t);
  int n = t.n;
  if (n == 1) return "()";
  // peel leaves to find the center
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  std::vector<int> center = layer;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      --remaining;
      for (int w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    }
    layer = next;
    center = layer;
  }
  std::function<std::string(int, int)> code = [&](int v, int parent) -> std::string {
    std::vector<std::string> kids;
    for (int w : adj[v])
      if (w != parent) kids.push_back(code(w, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const std::string& k : kids) out += k;
    out += ")";
    return out;
  };
  if (center.size() == 1) return code(center[0], -1);
  std::string a = code(center[0], center[1]);
  std::string b = code(center[1], center[0]);
  if (b < a) std::swap(a, b);
  return "[" + a + b + "]";
}

inline std::vector<Structure> enumerate_trees(int n, int hard_cap = 10) {
  if (n < 1 || n > hard_cap) throw limit_exceeded("enumerate_trees: vertex count out of range");
  std::vector<Structure> level = {complete(1)};
  for (int m = 2; m <= n; ++m) {
    std::map<std::string, Structure> next;
    for (const Structure& t : level)
      for (int v = 0; v < t.n; ++v) {
        auto edges = graph_edges(t);
        edges.emplace_back(v, m - 1);
        Structure s = make_graph(m, edges);
        next.emplace(tree_code(s), std::move(s));
      }
    level.clear();
    for (auto& [key, t] : next) level.push_back(std::move(t));
  }
  return level;
}

// All cographs with exactly n vertices up to isomorphism: disjoint unions of
// smaller connected cographs, and complements of those unions.
inline std::vector<Structure> enumerate_cographs(int n, int hard_cap = 8) {
  if (n < 1 || n > hard_cap) throw limit_exceeded("enumerate_cographs: vertex count out of range");
  // connected[m] = connected cographs on m vertices
  std::vector<std::vector<Structure>> connected(n + 1);
  std::vector<std::vector<Structure>> disconnected(n + 1);
  connected[1] = {complete(1)};
  for (int m = 2; m <= n; ++m) {
    // multisets of connected components with >= 2 parts, sizes summing to m;
    // components chosen with nondecreasing (size, index) to enumerate each
    // multiset once
    std::map<CanonicalKey, Structure> disc;
    std::function<void(int, int, int, const Structure*)> rec =
        [&](int left, int min_size, int min_idx, const Structure* acc) {
          if (left == 0) {
            if (acc) {
              Structure g = *acc;
              disc.emplace(canonical_key(g), std::move(g));
            }
            return;
          }
          for (int s = min_size; s <= left; ++s)
            for (std::size_t i = (s == min_size ? min_idx : 0); i < connected[s].size(); ++i) {
              Structure next =
                  acc ? disjoint_union(*acc, connected[s][i]) : connected[s][i];
              // require >= 2 parts overall: final acc must not be the first part alone
              if (left - s == 0 && !acc) continue;
              rec(left - s, s, static_cast<int>(i), &next);
            }
        };
    rec(m, 1, 0, nullptr);
    for (auto& [key, g] : disc) disconnected[m].push_back(std::move(g));
    for (const Structure& g : disconnected[m]) connected[m].push_back(complement(g));
  }
  std::map<CanonicalKey, Structure> all;
  for (const Structure& g : connected[n]) all.emplace(canonical_key(g), g);
  for (const Structure& g : disconnected[n]) all.emplace(canonical_key(g), g);
  std::vector<Structure> out;
  for (auto& [key, g] : all) out.push_back(std::move(g));
  return out;
}

// ---------------------------------------------------------------------------
// Named-structure tokens used by the command line: K5, C6, P4, E3, 2K3
// (disjoint clique copies), petersen, kneser_n_k, johnson_n_k, lk33.

inline Structure from_token(const std::string& token) {
  auto num = [&](std::size_t from, std::size_t to) {
    if (from >= to) throw std::invalid_argument("structure token: missing number in '" + token + "'");
    int v = 0;
    for (std::size_t i = from; i < to; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(token[i])))
        throw std::invalid_argument("structure token: bad number in '" + token + "'");
      v = v * 10 + (token[i] - '0');
    }
    return v;
  };
  if (token == "petersen") return petersen();
  if (token == "lk33") return line_graph_k33();
  if (token.rfind("kneser_", 0) == 0 || token.rfind("johnson_", 0) == 0) {
    auto us1 = token.find('_');
    auto us2 = token.find('_', us1 + 1);
    if (us2 == std::string::npos)
      throw std::invalid_argument("structure token: expected <family>_n_k in '" + token + "'");
    int n = num(us1 + 1, us2), k = num(us2 + 1, token.size());
    return token[0] == 'k' ? kneser(n, k) : johnson(n, k);
  }
  if (!token.empty() && (token[0] == 'K' || token[0] == 'C' || token[0] == 'P' || token[0] == 'E')) {
    int n = num(1, token.size());
    switch (token[0]) {
      case 'K': return complete(n);
      case 'C': return cycle(n);
      case 'P': return path(n);
      case 'E': return empty_graph(n);
    }
  }
  if (!token.empty() && std::isdigit(static_cast<unsigned char>(token[0]))) {
    auto kpos = token.find('K');
    if (kpos != std::string::npos)
      return disjoint_copies(num(0, kpos), complete(num(kpos + 1, token.size())));
  }
  throw std::invalid_argument("structure token: unrecognized '" + token + "'");
}

}  // namespace gen
}  // namespace relc
