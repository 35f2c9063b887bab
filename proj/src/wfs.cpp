#include "transys/wfs.hpp"

namespace transys {

std::vector<std::pair<int, int>> MorphismClass::pair_list() const {
  std::vector<std::pair<int, int>> out;
  pairs.for_each([&](int k) { out.push_back(poset->pair_at(k)); });
  return out;
}

MorphismClass class_of(const TransferSystem& r) { return MorphismClass{r.poset, r.edges}; }

bool has_lift(const Poset& p, std::pair<int, int> i, std::pair<int, int> r) {
  auto [a, b] = i;
  auto [x, y] = r;
  if (!p.leq(a, b) || !p.leq(x, y)) throw Error("has_lift requires related pairs");
  if (!(p.leq(a, x) && p.leq(b, y))) return true;  // no commuting square
  return p.leq(b, x);
}

MorphismClass left_class(const MorphismClass& m) {
  const Poset& p = *m.poset;
  Bitset out(p.pair_count());
  for (int k = 0; k < p.pair_count(); ++k) {
    auto [a, b] = p.pair_at(k);
    bool lifts = true;
    m.pairs.for_each([&](int j) {
      if (lifts && !has_lift(p, {a, b}, p.pair_at(j))) lifts = false;
    });
    if (lifts) out.set(k);
  }
  return MorphismClass{m.poset, std::move(out)};
}

MorphismClass left_class(const TransferSystem& r) { return left_class(class_of(r)); }

MorphismClass right_class(const MorphismClass& m) {
  const Poset& p = *m.poset;
  Bitset out(p.pair_count());
  for (int k = 0; k < p.pair_count(); ++k) {
    auto [x, y] = p.pair_at(k);
    bool lifts = true;
    m.pairs.for_each([&](int j) {
      if (lifts && !has_lift(p, p.pair_at(j), {x, y})) lifts = false;
    });
    if (lifts) out.set(k);
  }
  return MorphismClass{m.poset, std::move(out)};
}

MorphismClass downward_extension(const TransferSystem& r) {
  const Poset& p = *r.poset;
  Bitset out(p.pair_count());
  r.edges.for_each([&](int k) {
    auto [x, y] = p.pair_at(k);
    // every z <= x gives (z,y)
    p.down_set(x).for_each([&](int z) { out.set(p.pair_index(z, y)); });
  });
  return MorphismClass{r.poset, std::move(out)};
}

MorphismClass complement(const MorphismClass& m) {
  return MorphismClass{m.poset, m.pairs.complement()};
}

Factorization factorize(const TransferSystem& r, std::pair<int, int> f) {
  const Poset& p = *r.poset;
  auto wit = is_lattice(p);
  if (!wit) throw Error("factorize requires a lattice");
  auto [x, y] = f;
  if (!p.leq(x, y)) throw Error("factorize requires a related pair");
  int mid = y;  // y is always a candidate
  Bitset between = p.up_set(x);
  between &= p.down_set(y);
  between.for_each([&](int m) {
    if (m != y && r.edges.test(p.pair_index(m, y))) mid = wit->meet(mid, m);
  });
  return Factorization{mid, {x, mid}, {mid, y}};
}

bool is_wfs(const MorphismClass& l, const MorphismClass& r) {
  const Poset& p = *l.poset;
  if (!p.same_order_as(*r.poset)) throw Error("classes live on different posets");
  // factorization of every nonidentity morphism through an optional l-part
  // and an optional r-part (identity parts always allowed)
  for (int k = 0; k < p.pair_count(); ++k) {
    auto [x, y] = p.pair_at(k);
    bool ok = false;
    Bitset between = p.up_set(x);
    between &= p.down_set(y);
    between.for_each([&](int m) {
      if (ok) return;
      bool left_ok = (m == x) || l.pairs.test(p.pair_index(x, m));
      bool right_ok = (m == y) || r.pairs.test(p.pair_index(m, y));
      if (left_ok && right_ok) ok = true;
    });
    if (!ok) return false;
  }
  return left_class(r) == l && right_class(l) == r;
}

}  // namespace transys
