#include <doctest.h>

#include "transys/duality.hpp"
#include "transys/group_lattice.hpp"

using namespace transys;

TEST_CASE("phi swaps the extremes") {
  PosetPtr c1 = Poset::chain(1);
  Duality d = *canonical_duality(c1);
  CHECK(phi(d, trivial_system(c1)) == complete_system(c1));
  CHECK(phi(d, complete_system(c1)) == trivial_system(c1));
  CHECK(phi_inverse(d, complete_system(c1)) == trivial_system(c1));

  PosetPtr b3 = Poset::boolean_lattice(3);
  Duality db = *canonical_duality(b3);
  CHECK(phi(db, trivial_system(b3)) == complete_system(b3));
  CHECK(phi(db, complete_system(b3)) == trivial_system(b3));
}

TEST_CASE("the two phi formulas agree and phi is involutive") {
  std::vector<std::pair<PosetPtr, Duality>> cases;
  for (int n = 1; n <= 5; ++n) {
    PosetPtr p = Poset::chain(n);
    cases.emplace_back(p, *canonical_duality(p));
  }
  for (int n = 1; n <= 4; ++n) {
    PosetPtr p = Poset::product(Poset::chain(n), Poset::chain(1));
    cases.emplace_back(p, *canonical_duality(p));
  }
  {
    PosetPtr p = Poset::boolean_lattice(3);
    cases.emplace_back(p, *canonical_duality(p));
  }
  {
    SubgroupLattice lat = subgroup_lattice(make_group({2, 2}));
    cases.emplace_back(lat.poset, annihilator_duality(lat));
  }

  for (const auto& [p, d] : cases) {
    auto systems = enumerate_transfer_systems(p, 64);
    std::vector<Bitset> images;
    for (const auto& r : systems) {
      TransferSystem de = phi(d, r, PhiMethod::DownwardExtension);
      CHECK(de == phi(d, r, PhiMethod::Lifting));
      CHECK(phi(d, de) == r);                // involution
      CHECK(phi_inverse(d, de) == r);        // explicit inverse
      CHECK(phi_inverse(d, r) == de);        // involutive duality: same map
      images.push_back(de.edges);
    }
    // order-reversing
    for (std::size_t i = 0; i < systems.size(); ++i)
      for (std::size_t j = 0; j < systems.size(); ++j)
        CHECK(systems[i].edges.is_subset_of(systems[j].edges) ==
              images[j].is_subset_of(images[i]));
  }
}

TEST_CASE("phi round trip on chain 3") {
  PosetPtr c3 = Poset::chain(3);
  Duality d = *canonical_duality(c3);
  auto systems = enumerate_transfer_systems(c3);
  CHECK(systems.size() == 14);
  for (const auto& r : systems) CHECK(phi_inverse(d, phi(d, r)) == r);
}

TEST_CASE("facet restriction") {
  PosetPtr b2 = Poset::boolean_lattice(2);
  CHECK(facet_restrict(trivial_system(b2), 0, FacetSide::Top) ==
        trivial_system(Poset::boolean_lattice(1)));
  CHECK(facet_restrict(complete_system(b2), 1, FacetSide::Top) ==
        complete_system(Poset::boolean_lattice(1)));
  CHECK_THROWS_AS(facet_restrict(trivial_system(b2), 2, FacetSide::Top), Error);
  CHECK_THROWS_AS(facet_restrict(trivial_system(Poset::chain(2)), 0, FacetSide::Top), Error);

  // restrictions of valid systems are valid: facet_restrict validates
  PosetPtr b3 = Poset::boolean_lattice(3);
  for (const auto& r : enumerate_transfer_systems(b3))
    for (int axis = 0; axis < 3; ++axis)
      for (FacetSide side : {FacetSide::Bottom, FacetSide::Top}) {
        TransferSystem sub = facet_restrict(r, axis, side);
        CHECK(sub.poset->size() == 4);
      }
}

TEST_CASE("facet recursion base and small cases") {
  PosetPtr b1 = Poset::boolean_lattice(1);
  CHECK(bbpr_phi(trivial_system(b1)) == complete_system(b1));
  CHECK(bbpr_phi(complete_system(b1)) == trivial_system(b1));

  PosetPtr b2 = Poset::boolean_lattice(2);
  CHECK(bbpr_phi(trivial_system(b2)) == complete_system(b2));
  CHECK(bbpr_phi(complete_system(b2)) == trivial_system(b2));
}

TEST_CASE("facet recursion computes phi with the complement duality") {
  for (int n = 1; n <= 3; ++n) {
    PosetPtr cube = Poset::boolean_lattice(n);
    Duality d = *canonical_duality(cube);
    for (const auto& r : enumerate_transfer_systems(cube)) CHECK(bbpr_phi(r) == phi(d, r));
  }
}

TEST_CASE("long diagonal rule") {
  PosetPtr b2 = Poset::boolean_lattice(2);
  // input with an edge into the top: image omits the diagonal
  TransferSystem with_top = validate(b2, {{1, 3}, {0, 2}});
  CHECK_FALSE(bbpr_phi(with_top).contains(0, 3));
  // input with no edge into the top: image contains the diagonal
  TransferSystem no_top = validate(b2, {{0, 1}});
  CHECK(bbpr_phi(no_top).contains(0, 3));
}

TEST_CASE("slat profiles") {
  PosetPtr grid = Poset::product(Poset::chain(3), Poset::chain(1));
  CHECK(slat_profile(trivial_system(grid)).top_slat == -1);
  CHECK(slat_profile(complete_system(grid)).top_slat == 3);
  CHECK_THROWS_AS(slat_profile(trivial_system(Poset::chain(3))), Error);

  // a 3-slat system maps to a 1-slat system under phi
  Duality d = *canonical_duality(grid);
  bool saw_three_slat = false;
  for (const auto& r : enumerate_transfer_systems(grid)) {
    if (slat_profile(r).top_slat == 2) {
      saw_three_slat = true;
      CHECK(slat_profile(phi(d, r)).top_slat == 0);
    }
  }
  CHECK(saw_three_slat);
}

TEST_CASE("slat census symmetry") {
  for (int n = 1; n <= 4; ++n) {
    auto census = slat_census(n, 64);
    long long total = 0;
    for (const auto& [k, count] : census) total += count;
    CHECK(total ==
          static_cast<long long>(
              enumerate_transfer_systems(Poset::product(Poset::chain(n), Poset::chain(1)), 64)
                  .size()));
    for (int k = -1; k <= n; ++k) CHECK(census.at(k) == census.at(n - k - 1));
    CHECK(census.at(-1) == census.at(n));
  }
}

TEST_CASE("phi rejects a duality from a different poset") {
  Duality d = *canonical_duality(Poset::chain(2));
  CHECK_THROWS_AS(phi(d, trivial_system(Poset::chain(3))), Error);
}
