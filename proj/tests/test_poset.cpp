#include <doctest.h>

#include "oracles.hpp"
#include "transys/json_io.hpp"
#include "transys/poset.hpp"

using namespace transys;

namespace {

void check_poset_axioms(const Poset& p) {
  int n = p.size();
  for (int i = 0; i < n; ++i) CHECK(p.leq(i, i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j) CHECK_FALSE((p.leq(i, j) && p.leq(j, i)));
      for (int k = 0; k < n; ++k)
        if (p.leq(i, j) && p.leq(j, k)) CHECK(p.leq(i, k));
    }
}

void check_duality_laws(const Duality& d) {
  const Poset& p = *d.poset;
  int n = p.size();
  for (int i = 0; i < n; ++i) {
    CHECK(d.inverse[d.forward[i]] == i);
    CHECK(d.forward[d.inverse[i]] == i);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) CHECK(p.leq(x, y) == p.leq(d.forward[y], d.forward[x]));
  CHECK(d.is_involution == (d.forward == d.inverse));
}

}  // namespace

TEST_CASE("chain construction") {
  PosetPtr c0 = Poset::chain(0);
  CHECK(c0->size() == 1);
  CHECK(c0->pair_count() == 0);
  CHECK(c0->leq(0, 0));

  PosetPtr c2 = Poset::chain(2);
  CHECK(c2->size() == 3);
  CHECK(c2->leq(0, 2));
  CHECK_FALSE(c2->leq(2, 0));
  CHECK(c2->lattice()->meet(1, 2) == 1);
  CHECK(c2->lattice()->join(1, 2) == 2);

  // Hasse diagram of [5] is a path of 5 edges
  CHECK(Poset::chain(5)->cover_pairs().size() == 5);
}

TEST_CASE("products") {
  PosetPtr square = Poset::product(Poset::chain(1), Poset::chain(1));
  CHECK(square->size() == 4);
  CHECK(square->leq(0, 3));
  CHECK_FALSE(square->leq(1, 2));

  PosetPtr grid = Poset::product(Poset::chain(3), Poset::chain(2));
  CHECK(grid->size() == 12);
  CHECK(grid->lattice().has_value());
  CHECK(find_isomorphism(*grid, *Poset::divisor_lattice(72)).has_value());  // D_{p^3 q^2}

  PosetPtr cube = Poset::product(Poset::chain(1), Poset::product(Poset::chain(1), Poset::chain(1)));
  CHECK(find_isomorphism(*cube, *Poset::boolean_lattice(3)).has_value());
}

TEST_CASE("boolean lattices") {
  CHECK(find_isomorphism(*Poset::boolean_lattice(1), *Poset::chain(1)).has_value());

  PosetPtr b3 = Poset::boolean_lattice(3);
  CHECK(b3->size() == 8);
  CHECK(b3->cover_pairs().size() == 12);  // edges of the 3-cube

  PosetPtr b2 = Poset::boolean_lattice(2);
  std::vector<std::pair<int, int>> covers = b2->cover_pairs();
  std::vector<std::pair<int, int>> expected{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  CHECK(covers == expected);
  CHECK(b2->label(0) == "{}");
  CHECK(b2->label(3) == "{1,2}");
}

TEST_CASE("divisor posets") {
  CHECK(Poset::divisor_lattice(1)->size() == 1);
  CHECK_THROWS_AS(Poset::divisor_lattice(0), Error);

  PosetPtr d12 = Poset::divisor_lattice(12);
  CHECK(d12->size() == 6);
  CHECK(find_isomorphism(*d12, *Poset::product(Poset::chain(2), Poset::chain(1))).has_value());
  CHECK(find_isomorphism(*Poset::divisor_lattice(30), *Poset::boolean_lattice(3)).has_value());

  // meet = gcd, join = lcm
  PosetPtr d60 = Poset::divisor_lattice(60);
  auto w = is_lattice(*d60);
  REQUIRE(w.has_value());
  for (int i = 0; i < d60->size(); ++i)
    for (int j = 0; j < d60->size(); ++j) {
      CHECK(w->meet(i, j) == *oracles::brute_meet(*d60, i, j));
      CHECK(w->join(i, j) == *oracles::brute_join(*d60, i, j));
    }
}

TEST_CASE("partial order axioms hold on every constructor") {
  check_poset_axioms(*Poset::chain(4));
  check_poset_axioms(*Poset::boolean_lattice(3));
  check_poset_axioms(*Poset::divisor_lattice(12));
  check_poset_axioms(*Poset::product(Poset::chain(2), Poset::chain(1)));
  check_poset_axioms(*Poset::opposite(Poset::divisor_lattice(12)));
  check_poset_axioms(*Poset::divisor_lattice(60));  // 12 elements
}

TEST_CASE("opposite is an involution on the nose") {
  PosetPtr b3 = Poset::boolean_lattice(3);
  PosetPtr once = Poset::opposite(b3);
  PosetPtr twice = Poset::opposite(once);
  CHECK(twice.get() == b3.get());
  CHECK(once->leq(7, 0));
  CHECK_FALSE(once->leq(0, 7));
  CHECK(find_isomorphism(*Poset::opposite(Poset::chain(2)), *Poset::chain(2)).has_value());

  // covers reverse pairwise
  PosetPtr grid = Poset::product(Poset::chain(3), Poset::chain(1));
  auto covers = grid->cover_pairs();
  PosetPtr op = Poset::opposite(grid);
  for (auto [a, b] : covers) {
    auto rev = std::make_pair(b, a);
    auto op_covers = op->cover_pairs();
    CHECK(std::find(op_covers.begin(), op_covers.end(), rev) != op_covers.end());
  }
}

TEST_CASE("meet and join queries") {
  PosetPtr b3 = Poset::boolean_lattice(3);
  CHECK(*b3->meet(0b011, 0b110) == 0b010);  // {1,2} ^ {2,3} = {2}
  CHECK(*Poset::chain(5)->meet(2, 4) == 2);

  // two incomparable points over nothing: no meet
  PosetPtr vee = Poset::from_relation(4, {{0, 2}, {1, 2}, {0, 3}, {1, 3}});
  CHECK_FALSE(vee->meet(0, 1).has_value());  // no common lower bound
  CHECK_FALSE(vee->join(2, 3).has_value());
  CHECK(vee->meet(2, 3) == oracles::brute_meet(*vee, 2, 3));  // both absent: lower bounds clash
}

TEST_CASE("is_lattice") {
  for (int n = 1; n <= 6; ++n) CHECK(is_lattice(*Poset::boolean_lattice(n)).has_value());
  PosetPtr antichain = Poset::from_relation(2, {});
  CHECK_FALSE(is_lattice(*antichain).has_value());

  PosetPtr d60 = Poset::divisor_lattice(60);
  auto w = is_lattice(*d60);
  REQUIRE(w.has_value());
  // lattice laws on every pair/triple
  int n = d60->size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      CHECK(w->meet(x, y) == w->meet(y, x));
      CHECK(w->join(x, y) == w->join(y, x));
      CHECK(w->meet(x, w->join(x, y)) == x);  // absorption
      CHECK(w->join(x, w->meet(x, y)) == x);
      for (int z = 0; z < n; ++z) {
        CHECK(w->meet(x, w->meet(y, z)) == w->meet(w->meet(x, y), z));
        CHECK(w->join(x, w->join(y, z)) == w->join(w->join(x, y), z));
      }
    }
}

TEST_CASE("canonical dualities") {
  auto chain3 = canonical_duality(Poset::chain(3));
  REQUIRE(chain3.has_value());
  CHECK(chain3->forward == std::vector<int>{3, 2, 1, 0});
  CHECK(chain3->is_involution);
  check_duality_laws(*chain3);

  auto b2 = canonical_duality(Poset::boolean_lattice(2));
  REQUIRE(b2.has_value());
  CHECK(b2->forward[0] == 3);   // {} -> {1,2}
  CHECK(b2->forward[1] == 2);   // {1} -> {2}
  check_duality_laws(*b2);

  PosetPtr d12 = Poset::divisor_lattice(12);
  auto dd = canonical_duality(d12);
  REQUIRE(dd.has_value());
  // divisors of 12 ascending: 1,2,3,4,6,12; 2 -> 6 and 4 -> 3
  CHECK(d12->label(dd->forward[1]) == "6");
  CHECK(d12->label(dd->forward[3]) == "3");
  check_duality_laws(*dd);

  auto grid = canonical_duality(Poset::product(Poset::chain(3), Poset::chain(1)));
  REQUIRE(grid.has_value());
  check_duality_laws(*grid);
  auto op = canonical_duality(Poset::opposite(Poset::chain(3)));
  REQUIRE(op.has_value());
  check_duality_laws(*op);

  CHECK_FALSE(canonical_duality(Poset::from_relation(2, {{0, 1}})).has_value());
}

TEST_CASE("make_duality rejects bad maps") {
  PosetPtr c2 = Poset::chain(2);
  CHECK_THROWS_AS(make_duality(c2, {0, 1, 2}), Error);     // order-preserving
  CHECK_THROWS_AS(make_duality(c2, {0, 0, 1}), Error);     // not a permutation
  CHECK_THROWS_AS(make_duality(c2, {1, 0}), Error);        // wrong size
}

TEST_CASE("find_isomorphism") {
  CHECK(find_isomorphism(*Poset::chain(2), *Poset::chain(2)) == std::vector<int>{0, 1, 2});
  CHECK_FALSE(find_isomorphism(*Poset::boolean_lattice(2), *Poset::chain(3)).has_value());
  CHECK_FALSE(find_isomorphism(*Poset::chain(1), *Poset::chain(2)).has_value());

  // transported relation is exact
  PosetPtr d12 = Poset::divisor_lattice(12);
  PosetPtr grid = Poset::product(Poset::chain(2), Poset::chain(1));
  auto iso = find_isomorphism(*d12, *grid);
  REQUIRE(iso.has_value());
  for (int x = 0; x < d12->size(); ++x)
    for (int y = 0; y < d12->size(); ++y)
      CHECK(d12->leq(x, y) == grid->leq((*iso)[x], (*iso)[y]));
}

TEST_CASE("every poset is isomorphic to itself") {
  for (const char* spec : {"chain:4", "boolean:3", "divisors:12", "grid:2x1"}) {
    PosetPtr p = parse_poset_spec(spec);
    CHECK(find_isomorphism(*p, *p).has_value());
  }
}

TEST_CASE("from_relation closes transitively and rejects cycles") {
  PosetPtr p = Poset::from_relation(3, {{0, 1}, {1, 2}});
  CHECK(p->leq(0, 2));
  CHECK_THROWS_AS(Poset::from_relation(2, {{0, 1}, {1, 0}}), Error);
}
