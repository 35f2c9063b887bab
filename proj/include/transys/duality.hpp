#pragma once

#include <map>

#include "transys/wfs.hpp"

namespace transys {

// Two routes to the same map: via the downward-extension formula
// ((DE(R)^op)^nabla)^c, or via the left lifting class ((^lift R)^op)^nabla.
enum class PhiMethod { DownwardExtension, Lifting };

// The self-duality on transfer systems induced by a poset duality. The
// output is re-validated; a failure is an internal error, not user error.
TransferSystem phi(const Duality& d, const TransferSystem& r,
                   PhiMethod method = PhiMethod::DownwardExtension);

// Inverse map, using the inverse permutation of the duality. When the
// duality is an involution this coincides with phi.
TransferSystem phi_inverse(const Duality& d, const TransferSystem& r,
                           PhiMethod method = PhiMethod::DownwardExtension);

enum class FacetSide { Bottom, Top };

// Restriction of a transfer system on B_n to the facet (coordinate bit
// `axis` fixed to the given side), re-indexed on B_{n-1} by dropping that
// bit. axis is 0-based.
TransferSystem facet_restrict(const TransferSystem& r, int axis, FacetSide side);

// The recursive facet-by-facet involution on Trans(B_n): the base case swaps
// the trivial and complete systems on B_1; in dimension n each facet of the
// output receives the image of the opposite facet's restriction, and the
// long diagonal is added exactly when the input had no nontrivial edge with
// the top as target. Overlapping facet assignments are cross-checked.
TransferSystem bbpr_phi(const TransferSystem& r);

// Slats of a transfer system on [n]x[1]: slat k is the edge (k,0)->(k,1).
// Valid systems contain a downward-closed set of slats, so the top slat
// index (or -1 for none) determines them all.
struct SlatProfile {
  int n;         // chain length of the grid
  int top_slat;  // -1..n
};

SlatProfile slat_profile(const TransferSystem& r);

// Tally of Trans([n]x[1]) by top-slat index, keys -1..n.
std::map<int, long long> slat_census(int n, int max_pairs = -1);

}  // namespace transys
