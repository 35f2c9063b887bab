#include "transys/transfer_system.hpp"

#include <algorithm>
#include <cstdlib>

namespace transys {

std::vector<std::pair<int, int>> TransferSystem::edge_list() const {
  std::vector<std::pair<int, int>> out;
  edges.for_each([&](int k) { out.push_back(poset->pair_at(k)); });
  return out;
}

std::string TransferViolation::describe() const {
  switch (kind) {
    case Kind::NonRefining:
      return "edge (" + std::to_string(x) + "," + std::to_string(y) +
             ") does not refine the order";
    case Kind::Transitivity:
      return "transitivity fails: (" + std::to_string(x) + "," + std::to_string(y) + ") and (" +
             std::to_string(y) + "," + std::to_string(z) + ") present but (" + std::to_string(x) +
             "," + std::to_string(z) + ") missing";
    case Kind::Restriction:
      return "restriction fails: (" + std::to_string(x) + "," + std::to_string(y) +
             ") present and z=" + std::to_string(z) + " <= y but (x^z,z) missing";
  }
  return "unknown violation";
}

namespace {

// Meet table with -1 where no greatest lower bound exists.
std::vector<int> meet_table(const Poset& p) {
  int n = p.size();
  std::vector<int> t(static_cast<std::size_t>(n) * n, -1);
  if (p.lattice()) {
    const LatticeWitness& w = *p.lattice();
    return w.meets;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto m = p.meet(x, y);
      t[static_cast<std::size_t>(x) * n + y] = m ? *m : -1;
    }
  return t;
}

// Propagates the restriction and transitivity rules from the seed pairs
// until a fixed point, adding edges into `cur`. Returns false (early) if an
// edge from `forbidden` would be required.
bool close_from(const Poset& p, const std::vector<int>& meets, Bitset& cur,
                std::vector<int> work, const Bitset* forbidden) {
  int n = p.size();
  auto add = [&](int q) -> bool {
    if (cur.test(q)) return true;
    if (forbidden && forbidden->test(q)) return false;
    cur.set(q);
    work.push_back(q);
    return true;
  };
  while (!work.empty()) {
    int k = work.back();
    work.pop_back();
    auto [x, y] = p.pair_at(k);
    // compose on the right: (x,y),(y,z) => (x,z)
    bool ok = true;
    p.up_set(y).for_each([&](int z) {
      if (!ok || z == y) return;
      if (cur.test(p.pair_index(y, z)) && !add(p.pair_index(x, z))) ok = false;
    });
    if (!ok) return false;
    // compose on the left: (w,x),(x,y) => (w,y)
    p.down_set(x).for_each([&](int w) {
      if (!ok || w == x) return;
      if (cur.test(p.pair_index(w, x)) && !add(p.pair_index(w, y))) ok = false;
    });
    if (!ok) return false;
    // restriction: z <= y, x^z exists and differs from z => (x^z, z)
    p.down_set(y).for_each([&](int z) {
      if (!ok) return;
      int m = meets[static_cast<std::size_t>(x) * n + z];
      if (m >= 0 && m != z && !add(p.pair_index(m, z))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::vector<int> all_set_bits(const Bitset& b) {
  std::vector<int> out;
  b.for_each([&](int k) { out.push_back(k); });
  return out;
}

}  // namespace

std::optional<TransferViolation> find_violation(const Poset& p, const Bitset& edges) {
  std::optional<TransferViolation> hit;
  for (int k = 0; k < p.pair_count() && !hit; ++k) {
    if (!edges.test(k)) continue;
    auto [a, b] = p.pair_at(k);
    p.up_set(b).for_each([&](int c) {
      if (hit || c == b) return;
      if (edges.test(p.pair_index(b, c)) && !edges.test(p.pair_index(a, c)))
        hit = TransferViolation{TransferViolation::Kind::Transitivity, a, b, c};
    });
    if (hit) break;
    p.down_set(b).for_each([&](int z) {
      if (hit) return;
      auto m = p.lattice() ? std::optional<int>(p.lattice()->meet(a, z)) : p.meet(a, z);
      if (m && *m != z && !edges.test(p.pair_index(*m, z)))
        hit = TransferViolation{TransferViolation::Kind::Restriction, a, b, z};
    });
  }
  return hit;
}

std::optional<TransferViolation> find_violation(const Poset& p,
                                                const std::vector<std::pair<int, int>>& edges) {
  Bitset bits(p.pair_count());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= p.size() || b >= p.size() || a == b || !p.leq(a, b))
      return TransferViolation{TransferViolation::Kind::NonRefining, a, b, -1};
    bits.set(p.pair_index(a, b));
  }
  return find_violation(p, bits);
}

TransferSystem validate(PosetPtr p, const std::vector<std::pair<int, int>>& edges) {
  if (auto v = find_violation(*p, edges)) throw ValidationError(*v);
  Bitset bits(p->pair_count());
  for (auto [a, b] : edges) bits.set(p->pair_index(a, b));
  return TransferSystem{std::move(p), std::move(bits)};
}

TransferSystem trivial_system(PosetPtr p) {
  Bitset none(p->pair_count());
  return TransferSystem{std::move(p), std::move(none)};
}

TransferSystem complete_system(PosetPtr p) {
  Bitset all = Bitset(p->pair_count()).complement();
  return TransferSystem{std::move(p), std::move(all)};
}

TransferSystem generate(PosetPtr p, const Bitset& pairs) {
  if (!is_lattice(*p)) throw Error("generate requires a lattice");
  std::vector<int> meets = meet_table(*p);
  Bitset cur = pairs;
  close_from(*p, meets, cur, all_set_bits(cur), nullptr);
  return TransferSystem{std::move(p), std::move(cur)};
}

TransferSystem generate(PosetPtr p, const std::vector<std::pair<int, int>>& pairs) {
  Bitset bits(p->pair_count());
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= p->size() || b >= p->size() || a == b || !p->leq(a, b))
      throw Error("generator (" + std::to_string(a) + "," + std::to_string(b) +
                  ") does not refine the order");
    bits.set(p->pair_index(a, b));
  }
  return generate(std::move(p), bits);
}

Bitset restriction_closure(const Poset& p, const Bitset& pairs) {
  std::vector<int> meets = meet_table(p);
  int n = p.size();
  Bitset cur = pairs;
  std::vector<int> work = all_set_bits(cur);
  while (!work.empty()) {
    int k = work.back();
    work.pop_back();
    auto [x, y] = p.pair_at(k);
    p.down_set(y).for_each([&](int z) {
      int m = meets[static_cast<std::size_t>(x) * n + z];
      if (m >= 0 && m != z) {
        int q = p.pair_index(m, z);
        if (!cur.test(q)) {
          cur.set(q);
          work.push_back(q);
        }
      }
    });
  }
  return cur;
}

bool refines(const TransferSystem& r1, const TransferSystem& r2) {
  if (!r1.poset->same_order_as(*r2.poset)) throw Error("transfer systems live on different posets");
  return r1.edges.is_subset_of(r2.edges);
}

TransferSystem ts_meet(const TransferSystem& r1, const TransferSystem& r2) {
  if (!r1.poset->same_order_as(*r2.poset)) throw Error("transfer systems live on different posets");
  Bitset both = r1.edges;
  both &= r2.edges;
  if (auto v = find_violation(*r1.poset, both))
    throw std::logic_error("intersection of transfer systems failed validation: " + v->describe());
  return TransferSystem{r1.poset, std::move(both)};
}

TransferSystem ts_join(const TransferSystem& r1, const TransferSystem& r2) {
  if (!r1.poset->same_order_as(*r2.poset)) throw Error("transfer systems live on different posets");
  Bitset either = r1.edges;
  either |= r2.edges;
  return generate(r1.poset, either);
}

int default_enumeration_bound() {
  if (const char* env = std::getenv("TRANSYS_MAX_PAIRS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 40;
}

void for_each_transfer_system(const PosetPtr& p, const std::function<void(const Bitset&)>& emit,
                              int max_pairs) {
  if (max_pairs < 0) max_pairs = default_enumeration_bound();
  int m = p->pair_count();
  if (m > max_pairs)
    throw Error("poset has " + std::to_string(m) + " nontrivial pairs, exceeding the bound of " +
                std::to_string(max_pairs));
  std::vector<int> meets = meet_table(*p);

  Bitset cur(m), excluded(m);
  // Decide pairs in index order; exclude-first yields lexicographic output.
  std::function<void(int)> rec = [&](int k) {
    while (k < m && cur.test(k)) ++k;
    if (k == m) {
      emit(cur);
      return;
    }
    excluded.set(k);
    rec(k + 1);
    excluded.reset(k);

    Bitset saved = cur;
    cur.set(k);
    if (close_from(*p, meets, cur, {k}, &excluded)) rec(k + 1);
    cur = std::move(saved);
  };
  rec(0);
}

std::vector<TransferSystem> enumerate_transfer_systems(const PosetPtr& p, int max_pairs) {
  std::vector<TransferSystem> out;
  for_each_transfer_system(
      p, [&](const Bitset& edges) { out.push_back(TransferSystem{p, edges}); }, max_pairs);
  return out;
}

std::vector<std::pair<int, int>> maximal_edges(const TransferSystem& r) {
  const Poset& p = *r.poset;
  if (!is_chain(p)) throw Error("maximal edges are defined only on chains");
  std::vector<std::pair<int, int>> out;
  r.edges.for_each([&](int k) {
    auto [i, j] = p.pair_at(k);
    bool maximal = true;
    p.up_set(j).for_each([&](int l) {
      if (l != j && r.edges.test(p.pair_index(i, l))) maximal = false;
    });
    if (maximal) out.emplace_back(i, j);
  });
  return out;
}

int min_generating_number(const TransferSystem& r) {
  return static_cast<int>(maximal_edges(r).size());
}

}  // namespace transys
