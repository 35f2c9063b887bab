#pragma once

#include <vector>

#include "transys/poset.hpp"

namespace transys {

// A finite Abelian group presented as a product of cyclic factors. Factors
// are kept exactly as given; no normalization to invariant factors.
struct AbelianGroup {
  std::vector<int> factors;  // each >= 2; empty list is the trivial group
  int order = 1;

  // element codes are mixed-radix with the first factor most significant
  std::vector<int> decode(int code) const;
  int encode(const std::vector<int>& tuple) const;
  int add(int a, int b) const;
};

AbelianGroup make_group(const std::vector<int>& factors);

// The subgroup lattice plus the subgroup member lists that label it.
// Subgroups are canonicalized by their sorted member-code list and indexed
// by (cardinality, member list), which makes containment respect indices.
struct SubgroupLattice {
  AbelianGroup group;
  PosetPtr poset;                          // with lattice witness
  std::vector<std::vector<int>> members;   // member codes per subgroup, sorted
};

// Enumerates all subgroups by saturating closures of S + one generator.
SubgroupLattice subgroup_lattice(const AbelianGroup& g, int max_order = 256);

// The annihilator map H -> { y : sum_i x_i y_i / n_i = 0 in Q/Z for all x in
// H } under the pairing of the given presentation.
Duality annihilator_duality(const SubgroupLattice& lat);

// Rebuilds the lattice from the poset's subgroup provenance and binds the
// annihilator duality to the given poset handle.
Duality annihilator_duality(const PosetPtr& p);

}  // namespace transys
