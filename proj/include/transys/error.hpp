#pragma once

#include <stdexcept>
#include <string>

namespace transys {

// Raised for invalid user input: malformed specs, out-of-range arguments,
// mismatched posets, exceeded bounds. Internal-consistency failures (a
// theorem-guaranteed property not holding) use std::logic_error instead.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace transys
