#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "relc/iso.hpp"
#include "relc/perm.hpp"
#include "relc/structure.hpp"

using namespace relc;

namespace {

Structure cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
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

// count relation-preserving bijections directly, no group machinery
std::uint64_t brute_automorphism_count(const Structure& a) {
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    if (is_automorphism(a, Permutation(perm))) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

PermGroup cyclic3() { return PermGroup(3, {Permutation({1, 2, 0})}); }

PermGroup symmetric(int n) {
  std::vector<int> swap01(n), rot(n);
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
  return PermGroup(n, {Permutation(swap01), Permutation(rot)});
}

PermGroup alternating4() {
  // (0 1 2) and (0 1)(2 3) generate A4
  return PermGroup(4, {Permutation({1, 2, 0, 3}), Permutation({1, 0, 3, 2})});
}

}  // namespace

TEST_CASE("permutation basics") {
  Permutation p({1, 2, 0});
  CHECK(p.then(p).img == std::vector<int>{2, 0, 1});
  CHECK(p.then(p).then(p).is_identity());
  CHECK(p.inverse().img == std::vector<int>{2, 0, 1});
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PermGroup(3, {Permutation({1, 0})}), std::invalid_argument);
}

TEST_CASE("automorphism_group") {
  SECTION("complete graphs have the full symmetric group") {
    for (int n = 2; n <= 6; ++n) {
      std::uint64_t fact = 1;
      for (int i = 2; i <= n; ++i) fact *= i;
      CHECK(group_order(automorphism_group(complete(n)), 1'000'000) == fact);
    }
  }
  SECTION("cycles have dihedral symmetry") {
    for (int n = 3; n <= 8; ++n)
      CHECK(group_order(automorphism_group(cycle(n)), 1'000'000) ==
            static_cast<std::uint64_t>(2 * n));
  }
  SECTION("the Petersen graph has 120 automorphisms") {
    CHECK(group_order(automorphism_group(petersen()), 1'000'000) == 120);
  }
  SECTION("generators preserve and reflect every relation") {
    for (const Structure& g : {petersen(), cycle(6), complete(4)})
      for (const Permutation& p : automorphism_group(g).gens) CHECK(is_automorphism(g, p));
  }
  SECTION("closure order matches the brute-force count on graphs with <= 5 vertices") {
    for (int n = 1; n <= 5; ++n)
      for (const Structure& g : small_graphs(n))
        CHECK(group_order(automorphism_group(g), 1'000'000) == brute_automorphism_count(g));
  }
}

TEST_CASE("group_order") {
  CHECK(group_order(cyclic3(), 100) == 3);
  CHECK(group_order(PermGroup(5, {}), 100) == 1);
  CHECK(group_order(symmetric(4), 100) == 24);
  CHECK(group_order(alternating4(), 100) == 12);
  SECTION("cap exceeded is a distinct error") {
    CHECK_THROWS_AS(group_order(symmetric(5), 100), limit_exceeded);
  }
  SECTION("elements come in discovery order starting at the identity") {
    auto elems = group_elements(cyclic3(), 10);
    REQUIRE(elems.size() == 3);
    CHECK(elems[0].is_identity());
  }
}

TEST_CASE("orbits_on_tuples") {
  PermGroup aut = automorphism_group(petersen());

  SECTION("the Petersen graph is vertex-transitive") {
    OrbitPartition o = orbits_on_tuples(aut, 1, true);
    CHECK(o.orbit_count == 1);
    CHECK(o.tuples.size() == 10);
  }
  SECTION("injective pairs split into adjacent and non-adjacent") {
    OrbitPartition o = orbits_on_tuples(aut, 2, true);
    CHECK(o.orbit_count == 2);
    CHECK(o.tuples.size() == 90);
  }
  SECTION("independent 3-sets fall into exactly two set-orbits") {
    // union-find over unordered triples under the generator action
    Structure p = petersen();
    std::vector<std::vector<int>> indep;
    std::map<std::vector<int>, int> index;
    for (int a = 0; a < 10; ++a)
      for (int b = a + 1; b < 10; ++b)
        for (int c = b + 1; c < 10; ++c)
          if (!p.has_tuple(0, {a, b}) && !p.has_tuple(0, {a, c}) && !p.has_tuple(0, {b, c})) {
            index[{a, b, c}] = static_cast<int>(indep.size());
            indep.push_back({a, b, c});
          }
    CHECK(indep.size() == 30);
    std::vector<int> parent(indep.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t i = 0; i < indep.size(); ++i)
      for (const Permutation& g : aut.gens) {
        std::vector<int> img = {g(indep[i][0]), g(indep[i][1]), g(indep[i][2])};
        std::sort(img.begin(), img.end());
        int a = find(static_cast<int>(i)), b = find(index.at(img));
        if (a != b) parent[a] = b;
      }
    std::set<int> roots;
    for (std::size_t i = 0; i < indep.size(); ++i) roots.insert(find(static_cast<int>(i)));
    CHECK(roots.size() == 2);
  }
  SECTION("orbit ids are numbered by canonical representative order") {
    OrbitPartition o = orbits_on_tuples(aut, 2, true);
    REQUIRE(o.orbit_count == 2);
    CHECK(o.reps[0] < o.reps[1]);
    CHECK(o.reps[0] == Tuple{0, 1});
    CHECK(o.orbit_of(Tuple{0, 1}).value() == 0);
  }
  SECTION("non-injective orbits refine by repeated-entry collapse") {
    for (const Structure& g : small_graphs(4)) {
      PermGroup ag = automorphism_group(g);
      OrbitPartition o2 = orbits_on_tuples(ag, 2, false);
      OrbitPartition o1 = orbits_on_tuples(ag, 1, false);
      // tuples (v,v): same 2-orbit iff same 1-orbit of v
      for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v) {
          bool same2 = o2.orbit_of(Tuple{u, u}) == o2.orbit_of(Tuple{v, v});
          bool same1 = o1.orbit_of(Tuple{u}) == o1.orbit_of(Tuple{v});
          CHECK(same2 == same1);
        }
    }
  }
  SECTION("preconditions") {
    CHECK_THROWS_AS(orbits_on_tuples(cyclic3(), 0, true), std::invalid_argument);
    CHECK_THROWS_AS(orbits_on_tuples(cyclic3(), 4, true), std::invalid_argument);
  }
}

TEST_CASE("is_k_transitive") {
  SECTION("the symmetric group is fully transitive") {
    for (int k = 1; k <= 4; ++k) CHECK(is_k_transitive(symmetric(4), k));
  }
  SECTION("a 3-cycle is not 2-transitive") {
    CHECK(is_k_transitive(cyclic3(), 1));
    CHECK_FALSE(is_k_transitive(cyclic3(), 2));
  }
  SECTION("A4 is 2- but not 3-transitive") {
    CHECK(is_k_transitive(alternating4(), 2));
    CHECK_FALSE(is_k_transitive(alternating4(), 3));
  }
  SECTION("(k+1)-transitive implies k-transitive") {
    for (const PermGroup& g : {symmetric(4), alternating4(), cyclic3()})
      for (int k = 1; k + 1 <= g.degree; ++k)
        if (is_k_transitive(g, k + 1)) CHECK(is_k_transitive(g, k));
  }
}
