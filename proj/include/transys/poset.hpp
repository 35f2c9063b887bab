#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "transys/bitset.hpp"
#include "transys/error.hpp"

namespace transys {

class Poset;
using PosetPtr = std::shared_ptr<const Poset>;

// Total meet/join tables plus the bounds of a finite lattice. Kept separate
// from Poset so closure loops get O(1) meets without recomputation.
struct LatticeWitness {
  int size = 0;
  std::vector<int> meets;  // size*size, row-major
  std::vector<int> joins;
  int bottom = 0;
  int top = 0;

  int meet(int x, int y) const { return meets[static_cast<std::size_t>(x) * size + y]; }
  int join(int x, int y) const { return joins[static_cast<std::size_t>(x) * size + y]; }
};

// How a poset was built. Drives canonical dualities and shape-restricted
// operations (facets of a Boolean lattice, slats of a grid).
struct Provenance {
  enum class Kind { Chain, Boolean, Divisors, Product, Opposite, SubgroupLattice, Custom };
  Kind kind = Kind::Custom;
  long long n = 0;                        // chain length / Boolean dimension / divisor argument
  std::vector<long long> divisor_values;  // Divisors: element values, ascending
  PosetPtr factor_a, factor_b;            // Product
  PosetPtr inner;                         // Opposite
  std::vector<int> group_factors;         // SubgroupLattice: cyclic factor orders
};

// An immutable finite poset. Elements are dense indices 0..size-1; the full
// relation is stored as bitsets per element (both directions), and the
// universe of strict comparable pairs is indexed once so that edge sets of
// transfer systems and morphism classes are plain bitsets over pair indices.
class Poset {
 public:
  // The total order 0 < 1 < ... < n.
  static PosetPtr chain(int n);
  // Cartesian product ordered componentwise; element (a,b) has index a*|q|+b.
  static PosetPtr product(PosetPtr p, PosetPtr q);
  // Subsets of {1..n} as n-bit masks (element index == mask), ordered by inclusion.
  static PosetPtr boolean_lattice(int n);
  // Positive divisors of n under divisibility, ascending.
  static PosetPtr divisor_lattice(long long n);
  // Same carrier, relation reversed. opposite(opposite(p)) is p again.
  static PosetPtr opposite(PosetPtr p);
  // Arbitrary relation given as (i,j) pairs meaning i <= j. The input is
  // transitively closed; an antisymmetry violation is an error.
  static PosetPtr from_relation(int size, const std::vector<std::pair<int, int>>& leq_pairs,
                                std::vector<std::string> labels = {});
  // Internal constructor for fully specified posets (subgroup lattices).
  static PosetPtr from_rows(std::vector<Bitset> leq_rows, std::vector<std::string> labels,
                            Provenance prov, std::optional<LatticeWitness> witness);

  int size() const { return n_; }
  bool leq(int x, int y) const { return up_[x].test(y); }
  bool less(int x, int y) const { return x != y && leq(x, y); }
  const Bitset& up_set(int x) const { return up_[x]; }      // { y : x <= y }
  const Bitset& down_set(int y) const { return down_[y]; }  // { x : x <= y }

  // Greatest lower / least upper bound; absent if none exists.
  std::optional<int> meet(int x, int y) const;
  std::optional<int> join(int x, int y) const;

  // Witness computed at construction time for the built-in lattices.
  const std::optional<LatticeWitness>& lattice() const { return witness_; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int x) const { return labels_[x]; }

  // Strict comparable pairs (a,b), a < b in the order, indexed
  // lexicographically by (a,b). This ordering is part of the enumeration
  // contract.
  int pair_count() const { return static_cast<int>(pairs_.size()); }
  std::pair<int, int> pair_at(int k) const { return pairs_[k]; }
  int pair_index(int a, int b) const { return pair_index_[static_cast<std::size_t>(a) * n_ + b]; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  // Cover relations, i.e. the Hasse diagram edges.
  const std::vector<std::pair<int, int>>& cover_pairs() const { return covers_; }

  // Length of the longest chain below each element; used for drawing.
  std::vector<int> ranks() const;

  // Structural equality of the relation (and size). Labels are ignored.
  bool same_order_as(const Poset& other) const;

  const Provenance& provenance() const { return prov_; }

 private:
  Poset() = default;
  void finish();  // derive up/down sets, pair universe, covers

  int n_ = 0;
  std::vector<Bitset> up_, down_;
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> pair_index_;
  std::vector<std::pair<int, int>> covers_;
  bool linear_indexing_ = false;  // leq(x,y) implies x <= y as integers
  std::optional<LatticeWitness> witness_;
  Provenance prov_;
};

// Order-reversing bijection together with its inverse. `forward` plays the
// role of the duality map; `inverse` is its two-sided inverse permutation.
struct Duality {
  PosetPtr poset;
  std::vector<int> forward;
  std::vector<int> inverse;
  bool is_involution = false;
};

// Builds a Duality from a forward permutation, checking bijectivity and
// order reversal (x <= y iff forward(y) <= forward(x)).
Duality make_duality(PosetPtr p, std::vector<int> forward);

// Full meet/join tables if p is a lattice; returns the stored witness when
// one was attached at construction.
std::optional<LatticeWitness> is_lattice(const Poset& p);

// The componentwise duality of the registered constructions: i -> n-i on
// chains, complement on Boolean lattices, k -> n/k on divisor lattices,
// factor-wise on products. Absent for posets without such a construction.
std::optional<Duality> canonical_duality(PosetPtr p);

// An order-isomorphism p -> q as an index map, or absent. Deterministic:
// returns the lexicographically least isomorphism.
std::optional<std::vector<int>> find_isomorphism(const Poset& p, const Poset& q);

bool is_chain(const Poset& p);

}  // namespace transys
