#include "transys/group_lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

namespace transys {

std::vector<int> AbelianGroup::decode(int code) const {
  std::vector<int> tuple(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    tuple[i] = code % factors[i];
    code /= factors[i];
  }
  return tuple;
}

int AbelianGroup::encode(const std::vector<int>& tuple) const {
  int code = 0;
  for (std::size_t i = 0; i < factors.size(); ++i)
    code = code * factors[i] + ((tuple[i] % factors[i]) + factors[i]) % factors[i];
  return code;
}

int AbelianGroup::add(int a, int b) const {
  std::vector<int> ta = decode(a), tb = decode(b);
  for (std::size_t i = 0; i < factors.size(); ++i) ta[i] = (ta[i] + tb[i]) % factors[i];
  return encode(ta);
}

AbelianGroup make_group(const std::vector<int>& factors) {
  AbelianGroup g;
  g.factors = factors;
  long long order = 1;
  for (int f : factors) {
    if (f < 2) throw Error("cyclic factors must be at least 2");
    order *= f;
    if (order > (1 << 20)) throw Error("group order too large");
  }
  g.order = static_cast<int>(order);
  return g;
}

namespace {

std::string member_label(const AbelianGroup& g, const std::vector<int>& members) {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) s += ",";
    std::vector<int> t = g.decode(members[i]);
    if (t.size() == 1) {
      s += std::to_string(t[0]);
    } else {
      s += "(";
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(t[j]);
      }
      s += ")";
    }
  }
  return s + "}";
}

}  // namespace

SubgroupLattice subgroup_lattice(const AbelianGroup& g, int max_order) {
  if (g.order > max_order)
    throw Error("group order " + std::to_string(g.order) + " exceeds the bound of " +
                std::to_string(max_order));
  int order = g.order;

  // addition table; order is small by the bound above
  std::vector<int> sum(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) sum[static_cast<std::size_t>(a) * order + b] = g.add(a, b);

  // saturation: closure of (known subgroup + one extra element)
  std::vector<Bitset> pool;
  std::unordered_map<std::size_t, std::vector<int>> seen;  // hash -> pool indices
  auto lookup = [&](const Bitset& s) -> int {
    auto it = seen.find(s.hash());
    if (it != seen.end())
      for (int idx : it->second)
        if (pool[idx] == s) return idx;
    return -1;
  };
  auto insert = [&](const Bitset& s) -> bool {
    if (lookup(s) >= 0) return false;
    seen[s.hash()].push_back(static_cast<int>(pool.size()));
    pool.push_back(s);
    return true;
  };

  Bitset identity(order);
  identity.set(0);
  insert(identity);
  for (std::size_t head = 0; head < pool.size(); ++head) {
    Bitset base = pool[head];
    for (int x = 1; x < order; ++x) {
      if (base.test(x)) continue;
      // <base, x> = union of base + k*x over k
      Bitset closed = base;
      closed.set(x);
      int y = sum[static_cast<std::size_t>(x) * order + x];
      while (!closed.test(y)) {
        closed.set(y);
        y = sum[static_cast<std::size_t>(y) * order + x];
      }
      // now add base shifted by every power of x present
      Bitset shifts = closed;
      shifts.subtract(base);
      Bitset result = base;
      shifts.for_each([&](int s) {
        base.for_each([&](int b) { result.set(sum[static_cast<std::size_t>(s) * order + b]); });
      });
      insert(result);
    }
  }

  // canonical order: cardinality, then member list
  std::vector<std::vector<int>> members;
  members.reserve(pool.size());
  for (const auto& s : pool) {
    std::vector<int> m;
    s.for_each([&](int e) { m.push_back(e); });
    members.push_back(std::move(m));
  }
  std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  int count = static_cast<int>(members.size());
  std::vector<Bitset> sets(count, Bitset(order));
  for (int i = 0; i < count; ++i)
    for (int e : members[i]) sets[i].set(e);

  std::vector<Bitset> up(count, Bitset(count));
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      if (sets[i].is_subset_of(sets[j])) up[i].set(j);

  std::vector<std::string> labels;
  labels.reserve(count);
  for (const auto& m : members) labels.push_back(member_label(g, m));

  Provenance prov;
  prov.kind = Provenance::Kind::SubgroupLattice;
  prov.group_factors = g.factors;
  std::vector<Bitset> rows = up;
  PosetPtr probe = Poset::from_rows(std::move(up), labels, prov, std::nullopt);
  auto witness = is_lattice(*probe);
  if (!witness) throw std::logic_error("subgroup containment must form a lattice");
  PosetPtr poset =
      Poset::from_rows(std::move(rows), std::move(labels), std::move(prov), std::move(witness));

  return SubgroupLattice{g, std::move(poset), std::move(members)};
}

Duality annihilator_duality(const SubgroupLattice& lat) {
  const AbelianGroup& g = lat.group;
  int order = g.order;
  long long l = 1;
  for (int f : g.factors) l = std::lcm(l, static_cast<long long>(f));

  // pairing table: <x,y> = sum_i x_i y_i (L/n_i) mod L
  std::vector<int> pairing(static_cast<std::size_t>(order) * order, 0);
  for (int x = 0; x < order; ++x) {
    std::vector<int> tx = g.decode(x);
    for (int y = 0; y < order; ++y) {
      std::vector<int> ty = g.decode(y);
      long long v = 0;
      for (std::size_t i = 0; i < g.factors.size(); ++i)
        v = (v + static_cast<long long>(tx[i]) * ty[i] % l * (l / g.factors[i])) % l;
      pairing[static_cast<std::size_t>(x) * order + y] = static_cast<int>(v);
    }
  }

  int count = lat.poset->size();
  std::map<std::vector<int>, int> index_of;
  for (int i = 0; i < count; ++i) index_of[lat.members[i]] = i;

  std::vector<int> forward(count);
  for (int i = 0; i < count; ++i) {
    std::vector<int> ann;
    for (int y = 0; y < order; ++y) {
      bool kills_all = true;
      for (int x : lat.members[i])
        if (pairing[static_cast<std::size_t>(x) * order + y] != 0) {
          kills_all = false;
          break;
        }
      if (kills_all) ann.push_back(y);
    }
    auto it = index_of.find(ann);
    if (it == index_of.end())
      throw std::logic_error("annihilator of a subgroup is not a subgroup in the list");
    forward[i] = it->second;
  }
  return make_duality(lat.poset, std::move(forward));
}

Duality annihilator_duality(const PosetPtr& p) {
  if (p->provenance().kind != Provenance::Kind::SubgroupLattice)
    throw Error("annihilator duality requires a subgroup-lattice poset");
  AbelianGroup g = make_group(p->provenance().group_factors);
  SubgroupLattice lat = subgroup_lattice(g, g.order);
  if (!lat.poset->same_order_as(*p))
    throw std::logic_error("rebuilt subgroup lattice differs from the given poset");
  Duality d = annihilator_duality(lat);
  return make_duality(p, std::move(d.forward));
}

}  // namespace transys
