#include <catch2/catch_amalgamated.hpp>

#include "relc/complexity.hpp"
#include "relc/generators.hpp"
#include "relc/homogeneity.hpp"
#include "relc/homogenization.hpp"
#include "relc/structure.hpp"

using namespace relc;

TEST_CASE("metric lift") {
  SECTION("C6 gains distance-2 and distance-3 relations and becomes ultrahomogeneous") {
    Lift x = metric_lift(gen::cycle(6));
    REQUIRE(x.ext_sig.size() == 2);
    CHECK(x.ext_sig.names == std::vector<std::string>{"dist_2", "dist_3"});
    CHECK(x.ext_rels[0].size() == 12);
    CHECK(x.ext_rels[1].size() == 6);
    CHECK(is_ultrahomogeneous(x).ultrahomogeneous);
  }
  SECTION("complete graphs gain nothing") {
    for (int n = 2; n <= 5; ++n) {
      Lift x = metric_lift(gen::complete(n));
      CHECK_FALSE(x.has_extension());
      CHECK(is_ultrahomogeneous(x).ultrahomogeneous);
    }
  }
  SECTION("cycles are metrically ultrahomogeneous") {
    for (int n = 3; n <= 10; ++n)
      CHECK(is_ultrahomogeneous(metric_lift(gen::cycle(n))).ultrahomogeneous);
  }
  SECTION("disconnected input is rejected") {
    CHECK_THROWS_AS(metric_lift(disjoint_union(gen::complete(2), gen::complete(2))),
                    std::invalid_argument);
  }
  SECTION("distance relations partition the off-diagonal pairs with the edges") {
    for (const Structure& g : {gen::cycle(7), gen::petersen(), gen::path(5)}) {
      Lift x = metric_lift(g);
      std::size_t total = g.rels[0].size();
      for (const TupleSet& ts : x.ext_rels) total += ts.size();
      CHECK(total == static_cast<std::size_t>(g.n) * (g.n - 1));
    }
  }
  SECTION("metric relations are invariant for small connected graphs") {
    // closure under every automorphism generator; ultrahomogeneity of the
    // metric lift itself holds only for metrically homogeneous graphs
    for (int n = 2; n <= 6; ++n)
      for (const Structure& g : gen::enumerate_graphs(n)) {
        if (connected_components(g).size() != 1) continue;
        Lift x = metric_lift(g);
        PermGroup aut = automorphism_group(g);
        for (const Permutation& p : aut.gens)
          for (int s = 0; s < x.ext_sig.size(); ++s)
            for (const Tuple& t : x.ext_rels[s]) {
              Tuple img = {p(t[0]), p(t[1])};
              CHECK(std::binary_search(x.ext_rels[s].begin(), x.ext_rels[s].end(), img));
            }
      }
  }
}

TEST_CASE("tree homogenization") {
  SECTION("a single vertex is returned unchanged") {
    Lift x = tree_homogenize(gen::complete(1));
    CHECK_FALSE(x.has_extension());
  }
  SECTION("P3 homogenizes") {
    Lift x = tree_homogenize(gen::path(3));
    CHECK(is_ultrahomogeneous(x).ultrahomogeneous);
    for (int ar : x.ext_sig.arities) CHECK(ar <= 2);
  }
  SECTION("every tree with <= 8 vertices homogenizes with arities <= 2") {
    for (int n = 1; n <= 8; ++n)
      for (const Structure& t : gen::enumerate_trees(n)) {
        Lift x = tree_homogenize(t);
        for (int ar : x.ext_sig.arities) CHECK(ar <= 2);
        CHECK(is_ultrahomogeneous(x).ultrahomogeneous);
      }
  }
  SECTION("the lift relations are invariant: trees have relational complexity <= 2") {
    for (int n = 1; n <= 7; ++n)
      for (const Structure& t : gen::enumerate_trees(n)) {
        CHECK(verify_rc_witness(tree_homogenize(t)));
        CHECK(relational_complexity(t).value <= 2);
      }
  }
  SECTION("vertex colors are honored") {
    // a path colored asymmetrically: ends distinguished
    Lift x = tree_homogenize(gen::path(3), std::vector<int>{7, 0, 9});
    CHECK(is_ultrahomogeneous(x).ultrahomogeneous);
    // the two end colors appear as distinct unary classes
    int unary_singletons = 0;
    for (int s = 0; s < x.ext_sig.size(); ++s)
      if (x.ext_sig.arities[s] == 1 && x.ext_rels[s].size() == 1) ++unary_singletons;
    CHECK(unary_singletons >= 2);
  }
  SECTION("colored trees homogenize too") {
    for (const Structure& t : gen::enumerate_trees(6)) {
      std::vector<int> colors(t.n);
      for (int v = 0; v < t.n; ++v) colors[v] = v % 2;
      Lift x = tree_homogenize(t, colors);
      CHECK(is_ultrahomogeneous(x).ultrahomogeneous);
      for (int ar : x.ext_sig.arities) CHECK(ar <= 2);
    }
  }
  SECTION("non-trees are rejected") {
    CHECK_THROWS_AS(tree_homogenize(gen::cycle(4)), std::invalid_argument);
    CHECK_THROWS_AS(tree_homogenize(disjoint_union(gen::complete(1), gen::complete(1))),
                    std::invalid_argument);
  }
}

TEST_CASE("verify_rc_witness") {
  SECTION("the metric lift of C6 is a valid witness") {
    CHECK(verify_rc_witness(metric_lift(gen::cycle(6))));
  }
  SECTION("an all-distinct coloring of C6 is ultrahomogeneous but not invariant") {
    Structure c6 = gen::cycle(6);
    std::vector<int> arities(6, 1);
    std::vector<TupleSet> rels;
    for (int v = 0; v < 6; ++v) rels.push_back({{v}});
    Lift x(c6, Signature(arities), rels);
    CHECK(is_ultrahomogeneous(x).ultrahomogeneous);
    CHECK_FALSE(verify_rc_witness(x));
  }
  SECTION("an ultrahomogeneous structure with no extension is a trivial witness") {
    CHECK(verify_rc_witness(Lift(gen::cycle(5))));
    CHECK(verify_rc_witness(Lift(gen::complete(4))));
  }
}
