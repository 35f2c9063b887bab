#include "transys/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace transys {

namespace {

std::string subset_label(int mask) {
  std::string s = "{";
  bool first = true;
  for (int k = 0; mask >> k; ++k) {
    if (mask & (1 << k)) {
      if (!first) s += ",";
      s += std::to_string(k + 1);
      first = false;
    }
  }
  return s + "}";
}

}  // namespace

void Poset::finish() {
  n_ = static_cast<int>(up_.size());
  down_.assign(n_, Bitset(n_));
  for (int x = 0; x < n_; ++x)
    up_[x].for_each([&](int y) { down_[y].set(x); });

  linear_indexing_ = true;
  for (int x = 0; x < n_ && linear_indexing_; ++x) {
    int top_bit = up_[x].find_first();
    if (top_bit < x) linear_indexing_ = false;  // some y < x with x <= y
  }

  pair_index_.assign(static_cast<std::size_t>(n_) * n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (a != b && up_[a].test(b)) {
        pair_index_[static_cast<std::size_t>(a) * n_ + b] = static_cast<int>(pairs_.size());
        pairs_.emplace_back(a, b);
      }

  // (a,b) is a cover exactly when the interval [a,b] has just two elements.
  for (auto [a, b] : pairs_) {
    Bitset interval = up_[a];
    interval &= down_[b];
    if (interval.count() == 2) covers_.emplace_back(a, b);
  }

  if (labels_.empty()) {
    labels_.resize(n_);
    for (int i = 0; i < n_; ++i) labels_[i] = std::to_string(i);
  }
}

std::optional<int> Poset::meet(int x, int y) const {
  if (witness_) return witness_->meet(x, y);
  Bitset lb = down_[x];
  lb &= down_[y];
  if (lb.none()) return std::nullopt;
  if (linear_indexing_) {
    // In a linear-extension indexing the only candidate is the top index.
    int m = lb.find_last();
    if (lb.is_subset_of(down_[m])) return m;
    return std::nullopt;
  }
  std::optional<int> best;
  lb.for_each([&](int m) {
    if (!best && lb.is_subset_of(down_[m])) best = m;
  });
  return best;
}

std::optional<int> Poset::join(int x, int y) const {
  if (witness_) return witness_->join(x, y);
  Bitset ub = up_[x];
  ub &= up_[y];
  if (ub.none()) return std::nullopt;
  if (linear_indexing_) {
    int j = ub.find_first();
    if (ub.is_subset_of(up_[j])) return j;
    return std::nullopt;
  }
  std::optional<int> best;
  ub.for_each([&](int j) {
    if (!best && ub.is_subset_of(up_[j])) best = j;
  });
  return best;
}

std::vector<int> Poset::ranks() const {
  // |down-set| sorts elements along a linear extension.
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return down_[a].count() < down_[b].count(); });
  std::vector<int> rank(n_, 0);
  for (int v : order)
    down_[v].for_each([&](int u) {
      if (u != v) rank[v] = std::max(rank[v], rank[u] + 1);
    });
  return rank;
}

bool Poset::same_order_as(const Poset& other) const {
  if (n_ != other.n_) return false;
  for (int x = 0; x < n_; ++x)
    if (up_[x] != other.up_[x]) return false;
  return true;
}

PosetPtr Poset::chain(int n) {
  if (n < 0) throw Error("chain length must be nonnegative");
  auto p = std::shared_ptr<Poset>(new Poset());
  p->up_.assign(n + 1, Bitset(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) p->up_[i].set(j);
  LatticeWitness w;
  w.size = n + 1;
  w.meets.resize(static_cast<std::size_t>(n + 1) * (n + 1));
  w.joins.resize(w.meets.size());
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      w.meets[static_cast<std::size_t>(i) * (n + 1) + j] = std::min(i, j);
      w.joins[static_cast<std::size_t>(i) * (n + 1) + j] = std::max(i, j);
    }
  w.bottom = 0;
  w.top = n;
  p->witness_ = std::move(w);
  p->prov_.kind = Provenance::Kind::Chain;
  p->prov_.n = n;
  p->finish();
  return p;
}

PosetPtr Poset::product(PosetPtr a, PosetPtr b) {
  int na = a->size(), nb = b->size();
  int n = na * nb;
  auto p = std::shared_ptr<Poset>(new Poset());
  p->up_.assign(n, Bitset(n));
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) {
      Bitset& row = p->up_[x * nb + y];
      a->up_set(x).for_each([&](int c) {
        b->up_set(y).for_each([&](int d) { row.set(c * nb + d); });
      });
    }
  p->labels_.reserve(n);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      p->labels_.push_back("(" + a->label(x) + "," + b->label(y) + ")");
  if (a->lattice() && b->lattice()) {
    const LatticeWitness& wa = *a->lattice();
    const LatticeWitness& wb = *b->lattice();
    LatticeWitness w;
    w.size = n;
    w.meets.resize(static_cast<std::size_t>(n) * n);
    w.joins.resize(w.meets.size());
    for (int x = 0; x < na; ++x)
      for (int y = 0; y < nb; ++y)
        for (int c = 0; c < na; ++c)
          for (int d = 0; d < nb; ++d) {
            std::size_t idx = static_cast<std::size_t>(x * nb + y) * n + (c * nb + d);
            w.meets[idx] = wa.meet(x, c) * nb + wb.meet(y, d);
            w.joins[idx] = wa.join(x, c) * nb + wb.join(y, d);
          }
    w.bottom = wa.bottom * nb + wb.bottom;
    w.top = wa.top * nb + wb.top;
    p->witness_ = std::move(w);
  }
  p->prov_.kind = Provenance::Kind::Product;
  p->prov_.factor_a = std::move(a);
  p->prov_.factor_b = std::move(b);
  p->finish();
  return p;
}

PosetPtr Poset::boolean_lattice(int n) {
  if (n < 0) throw Error("Boolean lattice dimension must be nonnegative");
  if (n > 20) throw Error("Boolean lattice dimension too large");
  int sz = 1 << n;
  auto p = std::shared_ptr<Poset>(new Poset());
  p->up_.assign(sz, Bitset(sz));
  for (int m = 0; m < sz; ++m)
    for (int s = 0; s < sz; ++s)
      if ((m & s) == m) p->up_[m].set(s);
  p->labels_.reserve(sz);
  for (int m = 0; m < sz; ++m) p->labels_.push_back(subset_label(m));
  LatticeWitness w;
  w.size = sz;
  w.meets.resize(static_cast<std::size_t>(sz) * sz);
  w.joins.resize(w.meets.size());
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y) {
      w.meets[static_cast<std::size_t>(x) * sz + y] = x & y;
      w.joins[static_cast<std::size_t>(x) * sz + y] = x | y;
    }
  w.bottom = 0;
  w.top = sz - 1;
  p->witness_ = std::move(w);
  p->prov_.kind = Provenance::Kind::Boolean;
  p->prov_.n = n;
  p->finish();
  return p;
}

PosetPtr Poset::divisor_lattice(long long n) {
  if (n < 1) throw Error("divisor poset requires a positive integer");
  std::vector<long long> divs;
  for (long long d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      divs.push_back(d);
      if (d != n / d) divs.push_back(n / d);
    }
  std::sort(divs.begin(), divs.end());
  int sz = static_cast<int>(divs.size());
  std::map<long long, int> index;
  for (int i = 0; i < sz; ++i) index[divs[i]] = i;

  auto p = std::shared_ptr<Poset>(new Poset());
  p->up_.assign(sz, Bitset(sz));
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j)
      if (divs[j] % divs[i] == 0) p->up_[i].set(j);
  p->labels_.reserve(sz);
  for (long long d : divs) p->labels_.push_back(std::to_string(d));
  LatticeWitness w;
  w.size = sz;
  w.meets.resize(static_cast<std::size_t>(sz) * sz);
  w.joins.resize(w.meets.size());
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j) {
      long long g = std::gcd(divs[i], divs[j]);
      w.meets[static_cast<std::size_t>(i) * sz + j] = index[g];
      w.joins[static_cast<std::size_t>(i) * sz + j] = index[divs[i] / g * divs[j]];
    }
  w.bottom = 0;
  w.top = sz - 1;
  p->witness_ = std::move(w);
  p->prov_.kind = Provenance::Kind::Divisors;
  p->prov_.n = n;
  p->prov_.divisor_values = std::move(divs);
  p->finish();
  return p;
}

PosetPtr Poset::opposite(PosetPtr q) {
  if (q->prov_.kind == Provenance::Kind::Opposite) return q->prov_.inner;
  auto p = std::shared_ptr<Poset>(new Poset());
  p->up_ = q->down_;
  p->labels_ = q->labels_;
  if (q->witness_) {
    LatticeWitness w = *q->witness_;
    std::swap(w.meets, w.joins);
    std::swap(w.bottom, w.top);
    p->witness_ = std::move(w);
  }
  p->prov_.kind = Provenance::Kind::Opposite;
  p->prov_.inner = std::move(q);
  p->finish();
  return p;
}

PosetPtr Poset::from_relation(int size, const std::vector<std::pair<int, int>>& leq_pairs,
                              std::vector<std::string> labels) {
  if (size < 0) throw Error("poset size must be nonnegative");
  if (!labels.empty() && static_cast<int>(labels.size()) != size)
    throw Error("label count does not match poset size");
  auto p = std::shared_ptr<Poset>(new Poset());
  p->up_.assign(size, Bitset(size));
  for (int i = 0; i < size; ++i) p->up_[i].set(i);
  for (auto [i, j] : leq_pairs) {
    if (i < 0 || j < 0 || i >= size || j >= size) throw Error("relation pair out of range");
    p->up_[i].set(j);
  }
  // Warshall closure by rows.
  for (int k = 0; k < size; ++k)
    for (int i = 0; i < size; ++i)
      if (p->up_[i].test(k)) p->up_[i] |= p->up_[k];
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      if (p->up_[i].test(j) && p->up_[j].test(i))
        throw Error("relation is not antisymmetric: elements " + std::to_string(i) + " and " +
                    std::to_string(j) + " are related both ways");
  p->labels_ = std::move(labels);
  p->finish();
  return p;
}

PosetPtr Poset::from_rows(std::vector<Bitset> leq_rows, std::vector<std::string> labels,
                          Provenance prov, std::optional<LatticeWitness> witness) {
  auto p = std::shared_ptr<Poset>(new Poset());
  p->up_ = std::move(leq_rows);
  p->labels_ = std::move(labels);
  p->prov_ = std::move(prov);
  p->witness_ = std::move(witness);
  p->finish();
  return p;
}

std::optional<LatticeWitness> is_lattice(const Poset& p) {
  if (p.lattice()) return p.lattice();
  int n = p.size();
  if (n == 0) return std::nullopt;
  LatticeWitness w;
  w.size = n;
  w.meets.resize(static_cast<std::size_t>(n) * n);
  w.joins.resize(w.meets.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto m = p.meet(x, y);
      auto j = p.join(x, y);
      if (!m || !j) return std::nullopt;
      w.meets[static_cast<std::size_t>(x) * n + y] = *m;
      w.joins[static_cast<std::size_t>(x) * n + y] = *j;
    }
  int bottom = 0, top = 0;
  for (int x = 1; x < n; ++x) {
    bottom = w.meet(bottom, x);
    top = w.join(top, x);
  }
  w.bottom = bottom;
  w.top = top;
  return w;
}

Duality make_duality(PosetPtr p, std::vector<int> forward) {
  int n = p->size();
  if (static_cast<int>(forward.size()) != n) throw Error("duality map has wrong size");
  std::vector<int> inverse(n, -1);
  for (int i = 0; i < n; ++i) {
    if (forward[i] < 0 || forward[i] >= n || inverse[forward[i]] != -1)
      throw Error("duality map is not a permutation");
    inverse[forward[i]] = i;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p->leq(x, y) != p->leq(forward[y], forward[x]))
        throw Error("map is not order-reversing at (" + std::to_string(x) + "," +
                    std::to_string(y) + ")");
  Duality d;
  d.poset = std::move(p);
  d.forward = std::move(forward);
  d.inverse = std::move(inverse);
  d.is_involution = (d.forward == d.inverse);
  return d;
}

namespace {

std::optional<std::vector<int>> canonical_forward(const Poset& p) {
  const Provenance& prov = p.provenance();
  switch (prov.kind) {
    case Provenance::Kind::Chain: {
      int n = static_cast<int>(prov.n);
      std::vector<int> f(n + 1);
      for (int i = 0; i <= n; ++i) f[i] = n - i;
      return f;
    }
    case Provenance::Kind::Boolean: {
      int sz = p.size();
      std::vector<int> f(sz);
      for (int m = 0; m < sz; ++m) f[m] = (sz - 1) ^ m;
      return f;
    }
    case Provenance::Kind::Divisors: {
      const auto& divs = prov.divisor_values;
      std::vector<int> f(p.size());
      for (int i = 0; i < p.size(); ++i) {
        long long q = prov.n / divs[i];
        f[i] = static_cast<int>(std::lower_bound(divs.begin(), divs.end(), q) - divs.begin());
      }
      return f;
    }
    case Provenance::Kind::Product: {
      auto fa = canonical_forward(*prov.factor_a);
      auto fb = canonical_forward(*prov.factor_b);
      if (!fa || !fb) return std::nullopt;
      int nb = prov.factor_b->size();
      std::vector<int> f(p.size());
      for (int a = 0; a < prov.factor_a->size(); ++a)
        for (int b = 0; b < nb; ++b) f[a * nb + b] = (*fa)[a] * nb + (*fb)[b];
      return f;
    }
    case Provenance::Kind::Opposite:
      // A map reversing the order also reverses the reversed order.
      return canonical_forward(*prov.inner);
    default:
      return std::nullopt;
  }
}

}  // namespace

std::optional<Duality> canonical_duality(PosetPtr p) {
  auto f = canonical_forward(*p);
  if (!f) return std::nullopt;
  return make_duality(std::move(p), std::move(*f));
}

namespace {

// Joint color refinement over both posets so colors are comparable.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const Poset& p, const Poset& q) {
  int n = p.size();
  std::vector<int> cp(n, 0), cq(n, 0);
  auto round = [&](bool initial) {
    std::map<std::vector<int>, int> ids;
    auto key_for = [&](const Poset& r, const std::vector<int>& c, int v) {
      std::vector<int> key;
      if (initial) {
        key = {r.down_set(v).count(), r.up_set(v).count()};
      } else {
        key.push_back(c[v]);
        std::vector<int> lows, highs;
        r.down_set(v).for_each([&](int u) {
          if (u != v) lows.push_back(c[u]);
        });
        r.up_set(v).for_each([&](int u) {
          if (u != v) highs.push_back(c[u]);
        });
        std::sort(lows.begin(), lows.end());
        std::sort(highs.begin(), highs.end());
        key.push_back(-1);
        key.insert(key.end(), lows.begin(), lows.end());
        key.push_back(-1);
        key.insert(key.end(), highs.begin(), highs.end());
      }
      auto [it, _] = ids.emplace(std::move(key), static_cast<int>(ids.size()));
      return it->second;
    };
    std::vector<int> np(n), nq(n);
    for (int v = 0; v < n; ++v) np[v] = key_for(p, cp, v);
    for (int v = 0; v < n; ++v) nq[v] = key_for(q, cq, v);
    bool changed = (np != cp) || (nq != cq);
    cp = std::move(np);
    cq = std::move(nq);
    return changed;
  };
  round(true);
  for (int i = 0; i < n; ++i)
    if (!round(false)) break;
  return {cp, cq};
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Poset& p, const Poset& q) {
  int n = p.size();
  if (n != q.size()) return std::nullopt;
  if (n == 0) return std::vector<int>{};

  auto [cp, cq] = refine_colors(p, q);
  {
    std::vector<int> hp = cp, hq = cq;
    std::sort(hp.begin(), hp.end());
    std::sort(hq.begin(), hq.end());
    if (hp != hq) return std::nullopt;
  }

  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || cq[w] != cp[v]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = (p.leq(u, v) == q.leq(map[u], w)) && (p.leq(v, u) == q.leq(w, map[u]));
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (rec(v + 1)) return true;
      used[w] = false;
      map[v] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return map;
}

bool is_chain(const Poset& p) {
  for (int x = 0; x < p.size(); ++x)
    for (int y = x + 1; y < p.size(); ++y)
      if (!p.leq(x, y) && !p.leq(y, x)) return false;
  return true;
}

}  // namespace transys
