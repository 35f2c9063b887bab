#include "transys/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>

#include "transys/duality.hpp"
#include "transys/group_lattice.hpp"
#include "transys/noncrossing.hpp"
#include "transys/transfer_system.hpp"
#include "transys/wfs.hpp"

namespace transys {

namespace {

template <typename F>
CheckResult timed(const std::string& name, F&& body) {
  CheckResult r;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string edge_string(const Poset& p, const Bitset& edges) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  edges.for_each([&](int k) {
    auto [a, b] = p.pair_at(k);
    os << (first ? "" : ",") << a << "->" << b;
    first = false;
  });
  os << "}";
  return os.str();
}

}  // namespace

std::vector<TestLattice> standard_test_lattices() {
  std::vector<TestLattice> out;
  for (int n = 1; n <= 5; ++n) {
    PosetPtr p = Poset::chain(n);
    out.push_back({"chain:" + std::to_string(n), p, *canonical_duality(p)});
  }
  for (int n = 1; n <= 3; ++n) {
    PosetPtr p = Poset::product(Poset::chain(n), Poset::chain(1));
    out.push_back({"grid:" + std::to_string(n) + "x1", p, *canonical_duality(p)});
  }
  {
    PosetPtr p = Poset::boolean_lattice(3);
    out.push_back({"boolean:3", p, *canonical_duality(p)});
  }
  {
    SubgroupLattice lat = subgroup_lattice(make_group({2, 2}));
    out.push_back({"abelian:2,2", lat.poset, annihilator_duality(lat)});
  }
  return out;
}

CheckResult verify_catalan(int max_n) {
  return timed("catalan", [&](CheckResult& r) {
    auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t pinned[] = {2, 5, 14, 42, 132, 429, 1430};  // Cat(2)..Cat(8)
    std::ostringstream counts;
    for (int n = 1; n <= max_n; ++n) {
      long long count = 0;
      for_each_transfer_system(Poset::chain(n), [&](const Bitset&) { ++count; });
      std::uint64_t expected = catalan(n + 1);
      if (n <= 7 && expected != pinned[n - 1])
        r.fail("closed form disagrees with the pinned value at n=" + std::to_string(n));
      if (static_cast<std::uint64_t>(count) != expected)
        r.fail("chain " + std::to_string(n) + ": enumerated " + std::to_string(count) +
               ", expected " + std::to_string(expected));
      counts << (n > 1 ? "," : "") << count;
    }
    r.detail = "|Trans([n])| for n=1.." + std::to_string(max_n) + ": " + counts.str();
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > 30.0) r.fail("exceeded the 30 s budget");
  });
}

CheckResult verify_narayana(int max_n) {
  return timed("narayana", [&](CheckResult& r) {
    for (int n = 1; n <= max_n; ++n) {
      std::map<int, long long> census = narayana_census(n);
      if (census[0] != 1)
        r.fail("chain " + std::to_string(n) + ": bucket 0 has " + std::to_string(census[0]) +
               " systems, expected just the trivial one");
      // systems minimally generated by j edges are counted by Nar(n+1, j+1)
      std::uint64_t total = 0;
      for (int j = 0; j <= n; ++j) {
        std::uint64_t expected = narayana(n + 1, j + 1);
        total += expected;
        if (static_cast<std::uint64_t>(census[j]) != expected)
          r.fail("chain " + std::to_string(n) + ", bucket " + std::to_string(j) + ": census " +
                 std::to_string(census[j]) + ", Nar(" + std::to_string(n + 1) + "," +
                 std::to_string(j + 1) + ")=" + std::to_string(expected));
      }
      if (total != catalan(n + 1))
        r.fail("chain " + std::to_string(n) + ": Narayana numbers do not sum to the Catalan count");
    }
    r.detail = "minimal-generating census matches Nar(n+1,k) for n=1.." + std::to_string(max_n);
  });
}

CheckResult verify_bijection(int max_n) {
  return timed("bijection", [&](CheckResult& r) {
    for (int n = 1; n <= max_n; ++n) {
      PosetPtr chain = Poset::chain(n);
      auto systems = enumerate_transfer_systems(chain);
      for (const auto& sys : systems) {
        TransferSystem back = chi(psi(sys), chain);
        if (!(back == sys)) {
          r.fail("chain " + std::to_string(n) + ": chi(psi(R)) != R for R=" +
                 edge_string(*chain, sys.edges));
        }
      }
      auto partitions = enumerate_noncrossing(n + 1);
      if (partitions.size() != systems.size())
        r.fail("chain " + std::to_string(n) + ": |NC| = " + std::to_string(partitions.size()) +
               " but |Trans| = " + std::to_string(systems.size()));
      for (const auto& pi : partitions) {
        if (!(psi(chi(pi, chain)) == pi)) r.fail("psi(chi(pi)) != pi at n=" + std::to_string(n));
      }
    }
    // worked example: {{0,1,2},{3,5},{4}} <-> {0->1,0->2,1->2,3->4,3->5}
    PosetPtr chain5 = Poset::chain(5);
    SetPartition pi = make_partition(6, {{0, 1, 2}, {3, 5}, {4}});
    TransferSystem image = chi(pi, chain5);
    TransferSystem expected = validate(chain5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}});
    if (!(image == expected))
      r.fail("worked example: chi produced " + edge_string(*chain5, image.edges));
    if (!(psi(expected) == pi)) r.fail("worked example: psi does not recover the partition");
    r.detail = "psi/chi mutually inverse for n=1.." + std::to_string(max_n) +
               "; worked example reproduces";
  });
}

CheckResult verify_wfs() {
  return timed("wfs", [&](CheckResult& r) {
    long long total = 0;
    for (const auto& tl : standard_test_lattices()) {
      auto systems = enumerate_transfer_systems(tl.poset, 64);
      total += static_cast<long long>(systems.size());
      for (const auto& sys : systems) {
        MorphismClass l = left_class(sys);
        if (!is_wfs(l, class_of(sys)))
          r.fail(tl.name + ": (left_class(R), R) fails the WFS test for R=" +
                 edge_string(*tl.poset, sys.edges));
        if (!(l == complement(downward_extension(sys))))
          r.fail(tl.name + ": left_class(R) != DE(R)^c for R=" +
                 edge_string(*tl.poset, sys.edges));
        if (!(right_class(l).pairs == sys.edges))
          r.fail(tl.name + ": right_class(left_class(R)) != R for R=" +
                 edge_string(*tl.poset, sys.edges));
      }
    }
    r.detail = std::to_string(total) + " systems across the test lattices";
  });
}

CheckResult verify_duality() {
  return timed("duality", [&](CheckResult& r) {
    for (const auto& tl : standard_test_lattices()) {
      auto t0 = std::chrono::steady_clock::now();
      if (!tl.duality.is_involution) {
        r.fail(tl.name + ": supplied duality is not an involution");
        continue;
      }
      auto systems = enumerate_transfer_systems(tl.poset, 64);
      std::vector<Bitset> images;
      images.reserve(systems.size());
      for (const auto& sys : systems) {
        TransferSystem de = phi(tl.duality, sys, PhiMethod::DownwardExtension);
        TransferSystem lift = phi(tl.duality, sys, PhiMethod::Lifting);
        if (!(de == lift))
          r.fail(tl.name + ": the two phi formulas disagree for R=" +
                 edge_string(*tl.poset, sys.edges));
        if (!(phi(tl.duality, de) == sys))
          r.fail(tl.name + ": phi is not an involution at R=" +
                 edge_string(*tl.poset, sys.edges));
        if (!(phi_inverse(tl.duality, phi(tl.duality, sys)) == sys))
          r.fail(tl.name + ": phi_inverse does not invert phi at R=" +
                 edge_string(*tl.poset, sys.edges));
        images.push_back(de.edges);
      }
      for (std::size_t i = 0; i < systems.size(); ++i)
        for (std::size_t j = 0; j < systems.size(); ++j) {
          bool fwd = systems[i].edges.is_subset_of(systems[j].edges);
          bool rev = images[j].is_subset_of(images[i]);
          if (fwd != rev) {
            r.fail(tl.name + ": phi is not order-reversing on a pair of systems");
            j = systems.size();
            i = systems.size() - 1;
          }
        }
      double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (tl.name == "boolean:3" && dt > 120.0)
        r.fail("B_3 duality check exceeded the 2 min budget");
    }
    r.detail = "phi involutive, order-reversing, both formulas agree on every test lattice";
  });
}

CheckResult verify_bbpr(int max_n) {
  return timed("bbpr", [&](CheckResult& r) {
    for (int n = 1; n <= max_n; ++n) {
      PosetPtr cube = Poset::boolean_lattice(n);
      Duality d = *canonical_duality(cube);
      auto systems = enumerate_transfer_systems(cube);
      for (const auto& sys : systems) {
        if (!(phi(d, sys) == bbpr_phi(sys)))
          r.fail("B_" + std::to_string(n) + ": phi and the facet recursion differ for R=" +
                 edge_string(*cube, sys.edges));
      }
    }
    // Golden pair on B_3 (masks over bits {1,2,3}). The input contains the
    // edge {2,3} -> {1,2,3}, so its image must omit the long diagonal.
    PosetPtr cube = Poset::boolean_lattice(3);
    TransferSystem input = validate(
        cube, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 5}, {2, 3}, {4, 5}, {6, 7}});
    TransferSystem expected =
        validate(cube, {{0, 2}, {0, 4}, {0, 6}, {1, 3}, {1, 5}, {1, 7}, {4, 6}});
    TransferSystem image = bbpr_phi(input);
    if (!(image == expected))
      r.fail("golden pair: facet recursion produced " + edge_string(*cube, image.edges));
    if (!(phi(*canonical_duality(cube), input) == expected))
      r.fail("golden pair: phi disagrees with the frozen image");
    if (image.contains(0, 7))
      r.fail("golden pair: long diagonal must be excluded when an edge targets the top");
    r.detail = "phi = facet recursion on Trans(B_n), n=1.." + std::to_string(max_n) +
               "; golden pair reproduces";
  });
}

CheckResult verify_slats(int max_n) {
  return timed("slats", [&](CheckResult& r) {
    for (int n = 1; n <= max_n; ++n) {
      PosetPtr grid = Poset::product(Poset::chain(n), Poset::chain(1));
      Duality d = *canonical_duality(grid);
      std::map<int, long long> census;
      for (int k = -1; k <= n; ++k) census[k] = 0;
      bool pointwise_ok = true;
      long long exchanged = 0;
      for_each_transfer_system(
          grid,
          [&](const Bitset& edges) {
            TransferSystem sys{grid, edges};
            int k = slat_profile(sys).top_slat;
            ++census[k];
            int mirrored = slat_profile(phi(d, sys)).top_slat;
            if (mirrored != n - k - 1) pointwise_ok = false;
            ++exchanged;
          },
          64);
      if (!pointwise_ok)
        r.fail("grid [" + std::to_string(n) + "]x[1]: phi does not map S_k into S_{n-k-1}");
      for (int k = -1; k <= n; ++k)
        if (census[k] != census[n - k - 1])
          r.fail("grid [" + std::to_string(n) + "]x[1]: |S_" + std::to_string(k) +
                 "| != |S_" + std::to_string(n - k - 1) + "|");
      if (n == 3 && census[2] == 0) r.fail("grid [3]x[1]: no 3-slat systems found");
      (void)exchanged;
    }
    r.detail = "slat census symmetric and phi exchanges S_k with S_{n-k-1}, n=1.." +
               std::to_string(max_n) + " (includes the [3]x[1] 3-slat/1-slat exchange)";
  });
}

namespace {

// All Abelian groups of a given order, one presentation per isomorphism
// class: for each prime power p^e, a partition of e gives factors p^part.
void abelian_presentations(int order, std::vector<std::vector<int>>& out) {
  std::vector<std::pair<int, int>> prime_powers;
  int rest = order;
  for (int p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      int e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      prime_powers.emplace_back(p, e);
    }
  if (rest > 1) prime_powers.emplace_back(rest, 1);

  std::vector<std::vector<std::vector<int>>> partitions_per_prime;
  for (auto [p, e] : prime_powers) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
      if (remaining == 0) {
        parts.push_back(cur);
        return;
      }
      for (int next = std::min(remaining, max_part); next >= 1; --next) {
        cur.push_back(next);
        rec(remaining - next, next);
        cur.pop_back();
      }
    };
    rec(e, e);
    partitions_per_prime.push_back(std::move(parts));
    (void)p;
  }

  std::vector<std::size_t> pick(partitions_per_prime.size(), 0);
  for (;;) {
    std::vector<int> factors;
    for (std::size_t i = 0; i < pick.size(); ++i) {
      auto [p, e] = prime_powers[i];
      (void)e;
      for (int part : partitions_per_prime[i][pick[i]]) {
        int f = 1;
        for (int t = 0; t < part; ++t) f *= p;
        factors.push_back(f);
      }
    }
    out.push_back(std::move(factors));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == partitions_per_prime[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
    if (pick.empty()) break;
  }
}

}  // namespace

CheckResult verify_abelian(int max_order) {
  return timed("abelian", [&](CheckResult& r) {
    struct Case {
      int p, q, a, b;
    };
    for (Case c : {Case{2, 3, 2, 1}, Case{2, 3, 1, 1}, Case{2, 5, 2, 1}}) {
      int order = 1;
      for (int t = 0; t < c.a; ++t) order *= c.p;
      for (int t = 0; t < c.b; ++t) order *= c.q;
      SubgroupLattice lat = subgroup_lattice(make_group({order}));
      PosetPtr grid = Poset::product(Poset::chain(c.a), Poset::chain(c.b));
      if (!find_isomorphism(*lat.poset, *grid))
        r.fail("Sub(C_" + std::to_string(order) + ") is not isomorphic to the grid [" +
               std::to_string(c.a) + "]x[" + std::to_string(c.b) + "]");
    }

    long long groups = 0;
    for (int order = 1; order <= max_order; ++order) {
      std::vector<std::vector<int>> presentations;
      if (order == 1)
        presentations.push_back({});
      else
        abelian_presentations(order, presentations);
      for (const auto& factors : presentations) {
        ++groups;
        SubgroupLattice lat = subgroup_lattice(make_group(factors));
        Duality d = annihilator_duality(lat);  // construction validates order reversal
        int count = lat.poset->size();
        for (int i = 0; i < count; ++i) {
          long long product = static_cast<long long>(lat.members[i].size()) *
                              static_cast<long long>(lat.members[d.forward[i]].size());
          if (product != order)
            r.fail("order " + std::to_string(order) + ": |H||H^ann| = " +
                   std::to_string(product));
        }
        for (int i = 0; i < count; ++i)
          for (int j = 0; j < count; ++j)
            if (lat.poset->leq(i, j) != lat.poset->leq(d.forward[j], d.forward[i])) {
              r.fail("order " + std::to_string(order) + ": annihilator map not order-reversing");
              j = count;
              i = count - 1;
            }
      }
    }
    r.detail = "subgroup-lattice isomorphisms hold; annihilator duality verified on " +
               std::to_string(groups) + " groups of order <= " + std::to_string(max_order);
  });
}

namespace {

// Validity test written directly from the axioms, independent of the
// library's validator and closure engine: brute-force glb search included.
bool oracle_is_transfer_system(const Poset& p, const Bitset& edges) {
  int m = p.pair_count();
  for (int i = 0; i < m; ++i) {
    if (!edges.test(i)) continue;
    auto [a, b] = p.pair_at(i);
    for (int j = 0; j < m; ++j) {
      if (!edges.test(j)) continue;
      auto [c, d] = p.pair_at(j);
      if (c == b && !edges.test(p.pair_index(a, d))) return false;
    }
    for (int z = 0; z < p.size(); ++z) {
      if (!p.leq(z, b)) continue;
      int glb = -1;
      for (int w = 0; w < p.size(); ++w) {
        if (!p.leq(w, a) || !p.leq(w, z)) continue;
        bool greatest = true;
        for (int v = 0; v < p.size(); ++v)
          if (p.leq(v, a) && p.leq(v, z) && !p.leq(v, w)) greatest = false;
        if (greatest) {
          glb = w;
          break;
        }
      }
      if (glb >= 0 && glb != z && !edges.test(p.pair_index(glb, z))) return false;
    }
  }
  return true;
}

}  // namespace

CheckResult verify_oracle() {
  return timed("oracle", [&](CheckResult& r) {
    std::vector<std::pair<std::string, PosetPtr>> posets;
    for (int n = 1; n <= 4; ++n)
      posets.emplace_back("chain:" + std::to_string(n), Poset::chain(n));
    posets.emplace_back("boolean:2", Poset::boolean_lattice(2));
    posets.emplace_back("grid:2x1", Poset::product(Poset::chain(2), Poset::chain(1)));
    for (const auto& [name, p] : posets) {
      int m = p->pair_count();
      if (m > 12) {
        r.fail(name + " has more than 12 nontrivial pairs");
        continue;
      }
      std::vector<Bitset> filtered;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        Bitset edges(m);
        for (int k = 0; k < m; ++k)
          if (mask & (std::uint64_t{1} << k)) edges.set(k);
        if (oracle_is_transfer_system(*p, edges)) filtered.push_back(std::move(edges));
      }
      std::sort(filtered.begin(), filtered.end(), Bitset::lex_less);
      auto enumerated = enumerate_transfer_systems(p);
      bool same = enumerated.size() == filtered.size();
      for (std::size_t i = 0; same && i < filtered.size(); ++i)
        same = enumerated[i].edges == filtered[i];
      if (!same)
        r.fail(name + ": backtracking enumeration (" + std::to_string(enumerated.size()) +
               ") differs from the subset filter (" + std::to_string(filtered.size()) + ")");
    }
    r.detail = "backtracking agrees with the exhaustive subset filter on every small poset";
  });
}

CheckResult verify_factorization() {
  return timed("factorization", [&](CheckResult& r) {
    for (const auto& tl : standard_test_lattices()) {
      auto systems = enumerate_transfer_systems(tl.poset, 64);
      for (const auto& sys : systems) {
        MorphismClass l = left_class(sys);
        for (int k = 0; k < tl.poset->pair_count(); ++k) {
          auto [x, y] = tl.poset->pair_at(k);
          Factorization f = factorize(sys, {x, y});
          bool left_ok = f.mid == x || l.contains(x, f.mid);
          bool right_ok = f.mid == y || sys.contains(f.mid, y);
          bool composes = tl.poset->leq(x, f.mid) && tl.poset->leq(f.mid, y);
          if (!left_ok || !right_ok || !composes)
            r.fail(tl.name + ": factorization of (" + std::to_string(x) + "," +
                   std::to_string(y) + ") through " + std::to_string(f.mid) +
                   " fails for R=" + edge_string(*tl.poset, sys.edges));
        }
      }
    }
    r.detail = "factorize lands in (left_class(R), R) for every morphism on the test lattices";
  });
}

std::vector<CheckResult> run_all_checks() {
  std::vector<CheckResult> out;
  out.push_back(verify_catalan());
  out.push_back(verify_narayana());
  out.push_back(verify_bijection());
  out.push_back(verify_wfs());
  out.push_back(verify_duality());
  out.push_back(verify_bbpr());
  out.push_back(verify_slats());
  out.push_back(verify_abelian());
  out.push_back(verify_oracle());
  out.push_back(verify_factorization());
  return out;
}

}  // namespace transys
