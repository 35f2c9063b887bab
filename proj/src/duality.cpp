#include "transys/duality.hpp"

namespace transys {

namespace {

// Applies (-)^op followed by the element map: (a,b) -> (map[b], map[a]).
Bitset reverse_and_relabel(const Poset& p, const Bitset& pairs, const std::vector<int>& map) {
  Bitset out(p.pair_count());
  pairs.for_each([&](int k) {
    auto [a, b] = p.pair_at(k);
    int q = p.pair_index(map[b], map[a]);
    if (q < 0) throw std::logic_error("duality image is not a comparable pair");
    out.set(q);
  });
  return out;
}

TransferSystem phi_with_map(const Duality& d, const TransferSystem& r,
                            const std::vector<int>& map, PhiMethod method) {
  const Poset& p = *d.poset;
  if (!p.same_order_as(*r.poset)) throw Error("duality and transfer system posets differ");
  Bitset image(p.pair_count());
  switch (method) {
    case PhiMethod::DownwardExtension:
      image = reverse_and_relabel(p, downward_extension(r).pairs, map).complement();
      break;
    case PhiMethod::Lifting:
      image = reverse_and_relabel(p, left_class(r).pairs, map);
      break;
  }
  if (auto v = find_violation(p, image))
    throw std::logic_error("phi produced an invalid transfer system: " + v->describe());
  return TransferSystem{r.poset, std::move(image)};
}

}  // namespace

TransferSystem phi(const Duality& d, const TransferSystem& r, PhiMethod method) {
  return phi_with_map(d, r, d.forward, method);
}

TransferSystem phi_inverse(const Duality& d, const TransferSystem& r, PhiMethod method) {
  return phi_with_map(d, r, d.inverse, method);
}

namespace {

int boolean_dim(const Poset& p) {
  if (p.provenance().kind != Provenance::Kind::Boolean)
    throw Error("operation requires a Boolean lattice poset");
  return static_cast<int>(p.provenance().n);
}

// Drops the given bit from a mask.
int drop_bit(int mask, int axis) {
  int low = mask & ((1 << axis) - 1);
  int high = (mask >> (axis + 1)) << axis;
  return low | high;
}

int insert_bit(int mask, int axis, int value) {
  int low = mask & ((1 << axis) - 1);
  int high = (mask >> axis) << (axis + 1);
  return low | high | (value << axis);
}

}  // namespace

TransferSystem facet_restrict(const TransferSystem& r, int axis, FacetSide side) {
  int n = boolean_dim(*r.poset);
  if (axis < 0 || axis >= n) throw Error("facet axis out of range");
  int bit = side == FacetSide::Top ? 1 : 0;
  PosetPtr sub = Poset::boolean_lattice(n - 1);
  Bitset out(sub->pair_count());
  r.edges.for_each([&](int k) {
    auto [a, b] = r.poset->pair_at(k);
    if (((a >> axis) & 1) == bit && ((b >> axis) & 1) == bit)
      out.set(sub->pair_index(drop_bit(a, axis), drop_bit(b, axis)));
  });
  if (auto v = find_violation(*sub, out))
    throw std::logic_error("facet restriction is not a transfer system: " + v->describe());
  return TransferSystem{std::move(sub), std::move(out)};
}

TransferSystem bbpr_phi(const TransferSystem& r) {
  int n = boolean_dim(*r.poset);
  if (n < 1) throw Error("the facet recursion starts at dimension 1");
  const Poset& p = *r.poset;
  if (n == 1) {
    // exchange trivial and complete on the 1-cube
    return r.edges.any() ? trivial_system(r.poset) : complete_system(r.poset);
  }
  int full = (1 << n) - 1;
  // -1 undecided, else 0/1; every pair except the long diagonal lies in a facet
  std::vector<int> decided(p.pair_count(), -1);
  for (int axis = 0; axis < n; ++axis) {
    for (int bit = 0; bit <= 1; ++bit) {
      FacetSide opposite = bit ? FacetSide::Bottom : FacetSide::Top;
      TransferSystem image = bbpr_phi(facet_restrict(r, axis, opposite));
      const Poset& sub = *image.poset;
      for (int k = 0; k < sub.pair_count(); ++k) {
        auto [a, b] = sub.pair_at(k);
        int q = p.pair_index(insert_bit(a, axis, bit), insert_bit(b, axis, bit));
        int value = image.edges.test(k) ? 1 : 0;
        if (decided[q] != -1 && decided[q] != value)
          throw std::logic_error("facet images disagree on a shared edge");
        decided[q] = value;
      }
    }
  }
  Bitset out(p.pair_count());
  for (int q = 0; q < p.pair_count(); ++q) {
    auto [a, b] = p.pair_at(q);
    if (a == 0 && b == full) continue;  // long diagonal handled below
    if (decided[q] == -1) throw std::logic_error("edge not covered by any facet");
    if (decided[q] == 1) out.set(q);
  }
  bool top_is_target = false;
  r.edges.for_each([&](int k) {
    if (r.poset->pair_at(k).second == full) top_is_target = true;
  });
  if (!top_is_target) out.set(p.pair_index(0, full));
  if (auto v = find_violation(p, out))
    throw std::logic_error("facet recursion produced an invalid transfer system: " + v->describe());
  return TransferSystem{r.poset, std::move(out)};
}

namespace {

// Chain length n of a grid [n]x[1]; errors out for any other shape.
int grid_chain_length(const Poset& p) {
  const Provenance& prov = p.provenance();
  if (prov.kind == Provenance::Kind::Product &&
      prov.factor_a->provenance().kind == Provenance::Kind::Chain &&
      prov.factor_b->provenance().kind == Provenance::Kind::Chain &&
      prov.factor_b->provenance().n == 1)
    return static_cast<int>(prov.factor_a->provenance().n);
  throw Error("operation requires the grid [n]x[1]");
}

}  // namespace

SlatProfile slat_profile(const TransferSystem& r) {
  int n = grid_chain_length(*r.poset);
  int top = -1;
  for (int k = 0; k <= n; ++k)
    if (r.contains(2 * k, 2 * k + 1)) top = k;
  // restriction forces slats below the top one; anything else is a bug
  for (int k = 0; k <= top; ++k)
    if (!r.contains(2 * k, 2 * k + 1))
      throw std::logic_error("slats of a valid transfer system must be downward closed");
  return SlatProfile{n, top};
}

std::map<int, long long> slat_census(int n, int max_pairs) {
  PosetPtr grid = Poset::product(Poset::chain(n), Poset::chain(1));
  std::map<int, long long> census;
  for (int k = -1; k <= n; ++k) census[k] = 0;
  for_each_transfer_system(
      grid,
      [&](const Bitset& edges) {
        int top = -1;
        for (int k = 0; k <= n; ++k) {
          int q = grid->pair_index(2 * k, 2 * k + 1);
          if (edges.test(q)) top = k;
        }
        ++census[top];
      },
      max_pairs);
  return census;
}

}  // namespace transys
