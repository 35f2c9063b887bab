#pragma once

#include <string>

#include "transys/transfer_system.hpp"

namespace transys {

// Hasse diagram: cover edges only, lower elements ranked below higher ones.
std::string poset_to_dot(const Poset& p);

// Full transfer-system digraph: every nontrivial edge, not just covers.
std::string ts_to_dot(const TransferSystem& r);

}  // namespace transys
