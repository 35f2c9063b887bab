#pragma once

#include <utility>

#include "transys/transfer_system.hpp"

namespace transys {

// An arbitrary set of nontrivial comparable pairs; identities are implicit.
// Used for lifting classes and downward extensions.
struct MorphismClass {
  PosetPtr poset;
  Bitset pairs;

  bool contains(int a, int b) const {
    int k = poset->pair_index(a, b);
    return k >= 0 && pairs.test(k);
  }
  std::vector<std::pair<int, int>> pair_list() const;

  bool operator==(const MorphismClass& o) const {
    return poset->same_order_as(*o.poset) && pairs == o.pairs;
  }
};

MorphismClass class_of(const TransferSystem& r);

// Whether i = (a,b) has the left lifting property against r = (x,y) in p.
// At most one commuting square exists (a <= x and b <= y); the lift exists
// iff b <= x. With no square the property holds vacuously.
bool has_lift(const Poset& p, std::pair<int, int> i, std::pair<int, int> r);

// All morphisms with the left lifting property against every member of m.
MorphismClass left_class(const MorphismClass& m);
MorphismClass left_class(const TransferSystem& r);
// All morphisms with the right lifting property against every member of m.
MorphismClass right_class(const MorphismClass& m);

// DE(R) = { (z,y) : exists x with z <= x < y and (x,y) in R }.
MorphismClass downward_extension(const TransferSystem& r);

// Complement within the strict comparable pairs.
MorphismClass complement(const MorphismClass& m);

struct Factorization {
  int mid;
  std::pair<int, int> left;   // (x, mid)
  std::pair<int, int> right;  // (mid, y)
};

// Factors f = (x,y) as a left map followed by a member of r: mid is the meet
// of all m with x <= m <= y and ((m,y) in R or m = y). Requires a lattice.
Factorization factorize(const TransferSystem& r, std::pair<int, int> f);

// Weak factorization system test: every morphism factors through l then r,
// and the two classes determine each other by lifting. No retract-closure
// check appears anywhere: in a poset the only retract of a morphism is the
// morphism itself, so the condition is automatic.
bool is_wfs(const MorphismClass& l, const MorphismClass& r);

}  // namespace transys
