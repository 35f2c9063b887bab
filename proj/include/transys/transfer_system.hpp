#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "transys/poset.hpp"

namespace transys {

// A transfer system on a poset: a refinement of the order that is reflexive
// (implicitly -- identity edges are never stored), transitive, and closed
// under restriction along meets. `edges` is a bitset over the poset's strict
// comparable pair universe.
struct TransferSystem {
  PosetPtr poset;
  Bitset edges;

  bool contains(int a, int b) const {
    int k = poset->pair_index(a, b);
    return k >= 0 && edges.test(k);
  }
  std::vector<std::pair<int, int>> edge_list() const;

  bool operator==(const TransferSystem& o) const {
    return poset->same_order_as(*o.poset) && edges == o.edges;
  }
};

struct TransferViolation {
  enum class Kind { NonRefining, Transitivity, Restriction };
  Kind kind;
  // NonRefining: (x,y) is not a strict related pair.
  // Transitivity: (x,y),(y,z) present but (x,z) missing.
  // Restriction: (x,y) present, z <= y, x^z exists, (x^z,z) missing.
  int x = -1, y = -1, z = -1;

  std::string describe() const;
};

// Checks the transfer-system axioms exhaustively; returns the first
// violation found (scanning pairs in index order) or nothing.
std::optional<TransferViolation> find_violation(const Poset& p,
                                                const std::vector<std::pair<int, int>>& edges);
std::optional<TransferViolation> find_violation(const Poset& p, const Bitset& edges);

// Raised by validate(); carries the violation.
struct ValidationError : Error {
  explicit ValidationError(TransferViolation v) : Error(v.describe()), violation(v) {}
  TransferViolation violation;
};

TransferSystem validate(PosetPtr p, const std::vector<std::pair<int, int>>& edges);

TransferSystem trivial_system(PosetPtr p);
TransferSystem complete_system(PosetPtr p);

// Least transfer system containing the given pairs: alternately closes under
// restriction and transitivity until a fixed point. Requires a lattice.
TransferSystem generate(PosetPtr p, const std::vector<std::pair<int, int>>& pairs);
TransferSystem generate(PosetPtr p, const Bitset& pairs);

// Closure under restriction alone (no transitivity step). Exposed because on
// chains the restriction closure of a noncrossing edge set is already a
// transfer system, which callers want to assert.
Bitset restriction_closure(const Poset& p, const Bitset& pairs);

// Refinement is containment of edge sets.
bool refines(const TransferSystem& r1, const TransferSystem& r2);

TransferSystem ts_meet(const TransferSystem& r1, const TransferSystem& r2);
TransferSystem ts_join(const TransferSystem& r1, const TransferSystem& r2);

// Enumeration bound: number of strict pairs the backtracking enumerator will
// accept. TRANSYS_MAX_PAIRS overrides the built-in default of 40.
int default_enumeration_bound();

// Visits every transfer system on p exactly once, in lexicographic order of
// the edge bitset (first pair index at which two systems differ decides;
// absent sorts first). The trivial system comes first, the complete one last.
void for_each_transfer_system(const PosetPtr& p, const std::function<void(const Bitset&)>& emit,
                              int max_pairs = -1);

std::vector<TransferSystem> enumerate_transfer_systems(const PosetPtr& p, int max_pairs = -1);

// Maximal edges of a transfer system on a chain: edges (i,j) with no longer
// edge (i,k), k > j, from the same source.
std::vector<std::pair<int, int>> maximal_edges(const TransferSystem& r);

// Size of a minimally generating edge set; equals |maximal_edges|.
int min_generating_number(const TransferSystem& r);

}  // namespace transys
