#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <set>

#include "relc/homogeneity.hpp"
#include "relc/iso.hpp"
#include "relc/structure.hpp"

using namespace relc;

namespace {

Structure cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make_graph(n, e);
}

Structure path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

Structure complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make_graph(n, e);
}

Structure petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, 5 + i);
  }
  return make_graph(10, e);
}

std::vector<Structure> small_graphs(int n) {
  std::vector<Structure> out;
  std::set<CanonicalKey> seen;
  int m = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<std::pair<int, int>> e;
    for (int b = 0; b < m; ++b)
      if (mask >> b & 1) e.push_back(all[b]);
    Structure g = make_graph(n, e);
    if (seen.insert(canonical_key(g)).second) out.push_back(g);
  }
  return out;
}

int graph_distance(const Structure& g, int a, int b) {
  return bfs_distances(graph_adjacency(g), a)[b];
}

}  // namespace

TEST_CASE("ultrahomogeneous verdicts on landmark graphs") {
  SECTION("the 5-cycle is ultrahomogeneous") {
    HomogeneityReport r = is_ultrahomogeneous(cycle(5));
    CHECK(r.ultrahomogeneous);
    CHECK_FALSE(r.witness.has_value());
  }
  SECTION("the Petersen graph is not; the witness crosses the two kinds of independent 3-sets") {
    Structure p = petersen();
    HomogeneityReport r = is_ultrahomogeneous(p);
    REQUIRE_FALSE(r.ultrahomogeneous);
    REQUIRE(r.witness.has_value());
    CHECK(verify_uh_witness(p, *r.witness));
    const PartialMap& m = r.witness->map;
    REQUIRE(m.size() == 3);
    std::vector<int> dom, img;
    for (auto [s, d] : m.pairs) {
      dom.push_back(s);
      img.push_back(d);
    }
    auto independent = [&](const std::vector<int>& s) {
      return !p.has_tuple(0, {s[0], s[1]}) && !p.has_tuple(0, {s[0], s[2]}) &&
             !p.has_tuple(0, {s[1], s[2]});
    };
    CHECK(independent(dom));
    CHECK(independent(img));
  }
  SECTION("C6 fails on a distance-2 pair against a distance-3 pair") {
    Structure c6 = cycle(6);
    HomogeneityReport r = is_ultrahomogeneous(c6);
    REQUIRE_FALSE(r.ultrahomogeneous);
    REQUIRE(r.witness.has_value());
    CHECK(verify_uh_witness(c6, *r.witness));
    const PartialMap& m = r.witness->map;
    REQUIRE(m.size() == 2);
    int dd = graph_distance(c6, m.pairs[0].first, m.pairs[1].first);
    int di = graph_distance(c6, m.pairs[0].second, m.pairs[1].second);
    CHECK(std::min(dd, di) == 2);
    CHECK(std::max(dd, di) == 3);
  }
  SECTION("empty and tiny structures") {
    CHECK(is_ultrahomogeneous(Structure(0, Signature({2}), {{}})).ultrahomogeneous);
    CHECK(is_ultrahomogeneous(complete(1)).ultrahomogeneous);
    CHECK(is_ultrahomogeneous(complete(2)).ultrahomogeneous);
  }
}

TEST_CASE("brute-force oracle") {
  CHECK(brute_force_uh(complete(4)));
  CHECK_FALSE(brute_force_uh(path(3)));
  CHECK(brute_force_uh(disjoint_union(complete(2), complete(2))));
  CHECK(brute_force_uh(cycle(5)));
  CHECK_FALSE(brute_force_uh(cycle(6)));
  SECTION("size bound is enforced") {
    CHECK_THROWS_AS(brute_force_uh(petersen()), std::invalid_argument);
    CHECK_NOTHROW(brute_force_uh(petersen(), 10));
  }
}

TEST_CASE("search and oracle agree on every graph with at most 5 vertices") {
  int count = 0;
  for (int n = 1; n <= 5; ++n)
    for (const Structure& g : small_graphs(n)) {
      ++count;
      CHECK(is_ultrahomogeneous(g).ultrahomogeneous == brute_force_uh(g));
    }
  CHECK(count == 1 + 2 + 4 + 11 + 34);
}

TEST_CASE("failure witnesses always re-verify") {
  for (int n = 3; n <= 5; ++n)
    for (const Structure& g : small_graphs(n)) {
      HomogeneityReport r = is_ultrahomogeneous(g);
      if (!r.ultrahomogeneous) {
        REQUIRE(r.witness.has_value());
        CHECK(verify_uh_witness(g, *r.witness));
      }
    }
}

TEST_CASE("verdict is invariant under relabeling") {
  std::mt19937 rng(98765);
  for (const Structure& g :
       {cycle(5), cycle(6), petersen(), path(4), complete(4), cycle(7)}) {
    bool base = is_ultrahomogeneous(g).ultrahomogeneous;
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<int> perm(g.n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(is_ultrahomogeneous(relabel(g, perm)).ultrahomogeneous == base);
    }
  }
}

TEST_CASE("a graph and its complement get the same verdict") {
  for (int n = 1; n <= 5; ++n)
    for (const Structure& g : small_graphs(n))
      CHECK(is_ultrahomogeneous(g).ultrahomogeneous ==
            is_ultrahomogeneous(complement(g)).ultrahomogeneous);
}

TEST_CASE("lifts are judged on the combined structure") {
  Structure c6 = cycle(6);
  TupleSet d2, d3;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      if (i == j) continue;
      int d = graph_distance(c6, i, j);
      if (d == 2) d2.push_back({i, j});
      if (d == 3) d3.push_back({i, j});
    }
  SECTION("distance-2 alone homogenizes C6") {
    Lift x(c6, Signature({2}, {"dist2"}), {d2});
    CHECK(is_ultrahomogeneous(x).ultrahomogeneous);
  }
  SECTION("full distance lift is also ultrahomogeneous") {
    Lift x(c6, Signature({2, 2}, {"dist2", "dist3"}), {d2, d3});
    CHECK(is_ultrahomogeneous(x).ultrahomogeneous);
  }
  SECTION("an asymmetric unary marking breaks ultrahomogeneity") {
    Lift x(c6, Signature({1}, {"mark"}), {{{0}}});
    CHECK_FALSE(is_ultrahomogeneous(x).ultrahomogeneous);
  }
}

TEST_CASE("larger ultrahomogeneous graphs run at practical cost") {
  Structure k3 = complete(3);
  Structure three_k3 = disjoint_union(disjoint_union(k3, k3), k3);
  CHECK(is_ultrahomogeneous(three_k3).ultrahomogeneous);
  CHECK(is_ultrahomogeneous(complement(three_k3)).ultrahomogeneous);
  CHECK(is_ultrahomogeneous(complete(7)).ultrahomogeneous);
  CHECK_FALSE(is_ultrahomogeneous(cycle(9)).ultrahomogeneous);
}

TEST_CASE("node limit raises the distinct resource error") {
  Limits tiny;
  tiny.max_nodes = 5;
  CHECK_THROWS_AS(is_ultrahomogeneous(petersen(), tiny), limit_exceeded);
}
