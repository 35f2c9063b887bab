#pragma once

#include <cstdint>
#include <map>

#include "transys/transfer_system.hpp"

namespace transys {

// A set partition of {0,...,ground_size-1}, canonicalized: each block is
// sorted and blocks are ordered by their least element.
struct SetPartition {
  int ground_size = 0;
  std::vector<std::vector<int>> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  bool operator==(const SetPartition& o) const {
    return ground_size == o.ground_size && blocks == o.blocks;
  }
};

// Canonicalizes and checks that the blocks partition {0..ground_size-1}.
SetPartition make_partition(int ground_size, std::vector<std::vector<int>> blocks);

// No a<b<c<d with a,c in one block and b,d in a different one.
bool is_noncrossing(const SetPartition& pi);

// All noncrossing partitions of {0..m-1} by recursive decomposition on the
// block of the least element; deterministic order, all-singletons first.
std::vector<SetPartition> enumerate_noncrossing(int m, int bound = 12);

// J(pi): each element joined to the largest element of its block.
std::vector<std::pair<int, int>> j_edges(const SetPartition& pi);

// The transfer system <J(pi)> on the chain [n], n = ground_size-1. Also
// asserts that the restriction closure of J(pi) is already transitively
// closed, which holds precisely because pi is noncrossing.
TransferSystem chi(const SetPartition& pi, PosetPtr chain = nullptr);

// The partition of {0..n} generated by the maximal edges of r (chain only).
// The result is asserted noncrossing.
SetPartition psi(const TransferSystem& r);

// Kreweras rank: ground size minus number of blocks.
int nc_rank(const SetPartition& pi);

// Exact closed forms; overflow raises an error.
std::uint64_t catalan(int m);
std::uint64_t narayana(int m, int k);

// Tally of Trans([n]) by minimal generating number, keys 0..n+1.
std::map<int, long long> narayana_census(int n, int max_pairs = -1);

}  // namespace transys
