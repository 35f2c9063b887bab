#include "transys/noncrossing.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace transys {

SetPartition make_partition(int ground_size, std::vector<std::vector<int>> blocks) {
  if (ground_size < 0) throw Error("ground set size must be nonnegative");
  std::vector<bool> seen(ground_size, false);
  int covered = 0;
  for (auto& block : blocks) {
    if (block.empty()) throw Error("partition blocks must be nonempty");
    std::sort(block.begin(), block.end());
    for (int e : block) {
      if (e < 0 || e >= ground_size) throw Error("partition element out of range");
      if (seen[e]) throw Error("element " + std::to_string(e) + " appears twice");
      seen[e] = true;
      ++covered;
    }
  }
  if (covered != ground_size) throw Error("blocks do not cover the ground set");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return SetPartition{ground_size, std::move(blocks)};
}

bool is_noncrossing(const SetPartition& pi) {
  int m = pi.ground_size;
  std::vector<int> block_of(m, -1);
  for (int i = 0; i < pi.block_count(); ++i)
    for (int e : pi.blocks[i]) block_of[e] = i;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        for (int d = c + 1; d < m; ++d)
          if (block_of[a] == block_of[c] && block_of[b] == block_of[d] &&
              block_of[a] != block_of[b])
            return false;
  return true;
}

namespace {

using Blocks = std::vector<std::vector<int>>;

// Noncrossing partitions of the interval [lo,hi): the block of lo is an
// increasing sequence; the gaps it carves out are partitioned independently.
std::vector<Blocks> nc_interval(int lo, int hi) {
  if (lo >= hi) return {Blocks{}};
  std::vector<Blocks> out;
  std::vector<int> block{lo};
  std::function<void()> assemble = [&]() {
    std::vector<std::vector<Blocks>> gap_choices;
    for (std::size_t i = 0; i < block.size(); ++i) {
      int glo = block[i] + 1;
      int ghi = (i + 1 < block.size()) ? block[i + 1] : hi;
      gap_choices.push_back(nc_interval(glo, ghi));
    }
    std::vector<std::size_t> pick(gap_choices.size(), 0);
    for (;;) {
      Blocks combined{block};
      for (std::size_t i = 0; i < pick.size(); ++i)
        for (const auto& b : gap_choices[i][pick[i]]) combined.push_back(b);
      out.push_back(std::move(combined));
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == gap_choices[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  };
  std::function<void(int)> grow = [&](int from) {
    assemble();
    for (int c = from; c < hi; ++c) {
      block.push_back(c);
      grow(c + 1);
      block.pop_back();
    }
  };
  grow(lo + 1);
  return out;
}

}  // namespace

std::vector<SetPartition> enumerate_noncrossing(int m, int bound) {
  if (m < 0) throw Error("ground set size must be nonnegative");
  if (m > bound)
    throw Error("ground set of size " + std::to_string(m) + " exceeds the bound of " +
                std::to_string(bound));
  std::vector<SetPartition> out;
  for (auto& blocks : nc_interval(0, m)) out.push_back(make_partition(m, std::move(blocks)));
  return out;
}

std::vector<std::pair<int, int>> j_edges(const SetPartition& pi) {
  std::vector<std::pair<int, int>> out;
  for (const auto& block : pi.blocks) {
    int top = block.back();
    for (int e : block)
      if (e != top) out.emplace_back(e, top);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TransferSystem chi(const SetPartition& pi, PosetPtr chain) {
  if (!is_noncrossing(pi)) throw Error("chi requires a noncrossing partition");
  int n = pi.ground_size - 1;
  if (n < 0) throw Error("chi requires a nonempty ground set");
  if (!chain) chain = Poset::chain(n);
  if (chain->size() != n + 1 || !is_chain(*chain))
    throw Error("partition ground set does not match the chain");
  Bitset seed(chain->pair_count());
  for (auto [a, b] : j_edges(pi)) seed.set(chain->pair_index(a, b));
  Bitset restricted = restriction_closure(*chain, seed);
  TransferSystem full = generate(chain, restricted);
  // On a chain the restriction closure of J(pi) needs no transitivity step.
  if (full.edges != restricted)
    throw std::logic_error("restriction closure of J(pi) was not transitively closed");
  return full;
}

SetPartition psi(const TransferSystem& r) {
  int m = r.poset->size();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [i, j] : maximal_edges(r)) parent[find(i)] = find(j);
  std::vector<std::vector<int>> grouped(m);
  for (int v = 0; v < m; ++v) grouped[find(v)].push_back(v);
  std::vector<std::vector<int>> blocks;
  for (auto& g : grouped)
    if (!g.empty()) blocks.push_back(std::move(g));
  SetPartition pi = make_partition(m, std::move(blocks));
  if (!is_noncrossing(pi))
    throw std::logic_error("the partition generated by maximal edges must be noncrossing");
  return pi;
}

int nc_rank(const SetPartition& pi) { return pi.ground_size - pi.block_count(); }

namespace {

std::uint64_t binomial_checked(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > UINT64_MAX) throw Error("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

std::uint64_t catalan(int m) {
  if (m < 1) throw Error("catalan requires m >= 1");
  unsigned __int128 c = binomial_checked(2 * m, m);
  c /= static_cast<unsigned>(m + 1);
  if (c > UINT64_MAX) throw Error("Catalan number overflows 64 bits");
  return static_cast<std::uint64_t>(c);
}

std::uint64_t narayana(int m, int k) {
  if (m < 1) throw Error("narayana requires m >= 1");
  if (k < 1 || k > m) throw Error("narayana index k out of range");
  unsigned __int128 prod =
      static_cast<unsigned __int128>(binomial_checked(m, k)) * binomial_checked(m, k - 1);
  prod /= static_cast<unsigned>(m);
  if (prod > UINT64_MAX) throw Error("Narayana number overflows 64 bits");
  return static_cast<std::uint64_t>(prod);
}

std::map<int, long long> narayana_census(int n, int max_pairs) {
  PosetPtr chain = Poset::chain(n);
  std::map<int, long long> census;
  for_each_transfer_system(
      chain,
      [&](const Bitset& edges) {
        TransferSystem r{chain, edges};
        ++census[min_generating_number(r)];
      },
      max_pairs);
  return census;
}

}  // namespace transys
