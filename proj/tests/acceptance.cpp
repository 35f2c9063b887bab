// Acceptance suite: one line per reproducibility criterion, exact and
// exhaustive at the stated sizes. Exits nonzero if any criterion fails.

#include <cstdio>

#include "transys/verify.hpp"

int main() {
  auto checks = transys::run_all_checks();
  int failures = 0;
  int index = 0;
  for (const auto& c : checks) {
    ++index;
    std::printf("%s criterion %d [%s] (%.2fs): %s\n", c.pass ? "PASS" : "FAIL", index,
                c.name.c_str(), c.seconds, c.detail.c_str());
    for (const auto& f : c.failures) std::printf("    counterexample: %s\n", f.c_str());
    if (!c.pass) ++failures;
  }
  if (failures) std::printf("%d of %d criteria failed\n", failures, index);
  return failures ? 1 : 0;
}
