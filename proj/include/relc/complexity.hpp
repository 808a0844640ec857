#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relc/homogeneity.hpp"
#include "relc/iso.hpp"
#include "relc/limits.hpp"
#include "relc/perm.hpp"
#include "relc/structure.hpp"

namespace relc {

enum class ComplexityMode { Relational, LiftArity };

struct ComplexityWitness {
  int value = 0;
  Lift witness;
  ComplexityMode mode = ComplexityMode::Relational;
};

// The lift of `a` by one extended slot per Aut(a)-orbit of injective
// k'-tuples, 1 <= k' <= k, ordered by (arity, canonical representative) and
// named "orb_<arity>_<index>".
//
// Why orbits of injective tuples suffice: every invariant relation is a union
// of orbits, and a partial map iff-preserves all unions iff it iff-preserves
// each orbit; a tuple with repeated entries belongs to an orbit determined by
// its distinct-entry collapse (partial isomorphisms are injective, so they
// respect equality patterns), which lives at a smaller arity that is also
// part of the lift. Hence ultrahomogeneity of this lift coincides with
// ultrahomogeneity of the full lift by all invariant relations of arity <= k.
inline Lift invariant_lift(const Structure& a, int k, const Limits& lim = {},
                           const PermGroup* aut = nullptr) {
  if (k < 0) throw std::invalid_argument("invariant_lift: k must be >= 0");
  if (k == 0) return Lift(a);
  PermGroup own;
  if (!aut) {
    own = automorphism_group(a, lim);
    aut = &own;
  }
  std::vector<int> arities;
  std::vector<std::string> names;
  std::vector<TupleSet> rels;
  for (int arity = 1; arity <= std::min(k, a.n); ++arity) {
    OrbitPartition orbits = orbits_on_tuples(*aut, arity, true, lim);
    std::vector<TupleSet> members = orbits.orbit_members();
    for (int o = 0; o < orbits.orbit_count; ++o) {
      arities.push_back(arity);
      names.push_back("orb_" + std::to_string(arity) + "_" + std::to_string(o));
      rels.push_back(std::move(members[o]));
    }
  }
  return Lift(a, Signature(std::move(arities), std::move(names)), std::move(rels));
}

// Least k such that the invariant lift of arity <= k is ultrahomogeneous,
// with that lift as a re-verifiable witness. Terminates at k <= n-1: with all
// orbits of arity <= n-1 present, any partial isomorphism on m < n points
// maps its domain tuple inside the tuple's own orbit slot, hence extends by
// an automorphism realizing the orbit; a total partial isomorphism is itself
// an automorphism.
inline ComplexityWitness relational_complexity(const Structure& a, const Limits& lim = {}) {
  if (a.n < 1) throw std::invalid_argument("relational_complexity: structure must be nonempty");
  PermGroup aut = automorphism_group(a, lim);
  for (int k = 0; k < a.n; ++k) {
    Lift x = invariant_lift(a, k, lim, &aut);
    if (is_ultrahomogeneous(x, lim, &aut).ultrahomogeneous)
      return {k, std::move(x), ComplexityMode::Relational};
  }
  throw std::logic_error("relational_complexity: no ultrahomogeneous lift up to arity n-1");
}

// 0 for ultrahomogeneous structures, else 1, witnessed by the lift that marks
// every vertex with its own unary relation.
inline ComplexityWitness lift_complexity(const Structure& a, const Limits& lim = {}) {
  if (a.n < 1) throw std::invalid_argument("lift_complexity: structure must be nonempty");
  if (is_ultrahomogeneous(a, lim).ultrahomogeneous)
    return {0, Lift(a), ComplexityMode::LiftArity};
  std::vector<int> arities(a.n, 1);
  std::vector<std::string> names;
  std::vector<TupleSet> rels;
  for (int v = 0; v < a.n; ++v) {
    names.push_back("color_" + std::to_string(v));
    rels.push_back({{v}});
  }
  Lift x(a, Signature(std::move(arities), std::move(names)), std::move(rels));
  if (!is_ultrahomogeneous(x, lim).ultrahomogeneous)
    throw std::logic_error("lift_complexity: distinct-color lift failed verification");
  return {1, std::move(x), ComplexityMode::LiftArity};
}

// Re-check a computed witness: shadow intact, lift ultrahomogeneous, arities
// within the claimed value, and (relational mode) every extended relation
// closed under every automorphism generator of the shadow.
inline bool verify_complexity_witness(const Structure& a, const ComplexityWitness& w,
                                      const Limits& lim = {}) {
  if (w.witness.base != a) return false;
  for (int ar : w.witness.ext_sig.arities)
    if (ar > w.value) return false;
  if (!is_ultrahomogeneous(w.witness, lim).ultrahomogeneous) return false;
  if (w.mode == ComplexityMode::Relational) {
    PermGroup aut = automorphism_group(a, lim);
    for (const auto& gen : aut.gens)
      for (int s = 0; s < w.witness.ext_sig.size(); ++s)
        for (const Tuple& t : w.witness.ext_rels[s]) {
          Tuple img = t;
          for (int& v : img) v = gen(v);
          if (!std::binary_search(w.witness.ext_rels[s].begin(), w.witness.ext_rels[s].end(),
                                  img))
            return false;
        }
  }
  return true;
}

// Complexity of a disjoint union of connected structures, from the component
// values. Relational mode raises the floor to 2 exactly when some pair of
// isomorphic components has a pair-union of relational complexity above 1
// (evaluated by direct computation); otherwise, and always in lift mode, the
// floor is 1. Applies only when the union itself is not ultrahomogeneous.
inline int predict_disjoint_union(const std::vector<Structure>& parts, ComplexityMode mode,
                                  const Limits& lim = {}) {
  if (parts.size() < 2) throw std::invalid_argument("predict_disjoint_union: need >= 2 parts");
  for (const Structure& p : parts)
    if (connected_components(p).size() != 1)
      throw std::invalid_argument("predict_disjoint_union: every part must be connected");
  Structure whole = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) whole = disjoint_union(whole, parts[i]);
  if (is_ultrahomogeneous(whole, lim).ultrahomogeneous)
    throw std::invalid_argument(
        "predict_disjoint_union: the union is ultrahomogeneous, the formula does not apply");

  int best = 0;
  for (const Structure& p : parts) {
    int v = mode == ComplexityMode::Relational ? relational_complexity(p, lim).value
                                               : lift_complexity(p, lim).value;
    best = std::max(best, v);
  }
  if (mode == ComplexityMode::LiftArity) return std::max(1, best);

  bool isomorphic_pair_above_1 = false;
  for (std::size_t i = 0; i < parts.size() && !isomorphic_pair_above_1; ++i)
    for (std::size_t j = i + 1; j < parts.size() && !isomorphic_pair_above_1; ++j)
      if (is_isomorphic(parts[i], parts[j], lim) &&
          relational_complexity(disjoint_union(parts[i], parts[j]), lim).value > 1)
        isomorphic_pair_above_1 = true;
  return std::max(isomorphic_pair_above_1 ? 2 : 1, best);
}

}  // namespace relc
