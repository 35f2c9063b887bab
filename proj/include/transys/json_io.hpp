#pragma once

#include <string>

#include <json.hpp>

#include "transys/group_lattice.hpp"
#include "transys/noncrossing.hpp"
#include "transys/transfer_system.hpp"

namespace transys {

// Poset spec strings: chain:N, grid:AxB[xC...], boolean:N, divisors:N,
// abelian:n1,n2,..., op:<spec>. max_order bounds the abelian construction.
PosetPtr parse_poset_spec(const std::string& spec, int max_order = 256);

// Spec string reconstructible from provenance, or "" when the poset has no
// registered construction.
std::string poset_spec_string(const Poset& p);

// {"size": n, "labels": [...], "leq": [[i,j],...]}, reflexive pairs implicit.
nlohmann::json poset_to_json(const Poset& p);
PosetPtr poset_from_json(const nlohmann::json& j);

// {"poset": <spec string or poset object>, "edges": [[a,b],...]}.
nlohmann::json ts_to_json(const TransferSystem& r);
TransferSystem ts_from_json(const nlohmann::json& j);

// {"n": n, "blocks": [[...],...]} on the ground set {0..n}.
nlohmann::json partition_to_json(const SetPartition& pi);
SetPartition partition_from_json(const nlohmann::json& j);

// {"forward": [...]} plus an optional embedded poset.
nlohmann::json duality_to_json(const Duality& d);
Duality duality_from_json(const nlohmann::json& j, PosetPtr fallback_poset);

}  // namespace transys
