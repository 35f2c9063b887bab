#pragma once

#include <string>
#include <vector>

#include "transys/poset.hpp"

namespace transys {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;
  double seconds = 0;

  void fail(std::string msg) {
    pass = false;
    if (failures.size() < 20) failures.push_back(std::move(msg));
  }
};

// One function per reproducibility check. Each is exact and exhaustive at
// the stated sizes; the two with stated time budgets enforce them.
CheckResult verify_catalan(int max_n = 7);        // |Trans([n])| = Cat(n+1), under 30 s
CheckResult verify_narayana(int max_n = 6);       // census by minimal generating number
CheckResult verify_bijection(int max_n = 6);      // psi/chi inverse bijections
CheckResult verify_wfs();                         // lifting classes and DE on test lattices
CheckResult verify_duality();                     // phi involutive/order-reversing, B_3 under 2 min
CheckResult verify_bbpr(int max_n = 3);           // phi equals the facet recursion
CheckResult verify_slats(int max_n = 5);          // |S_k| = |S_{n-k-1}|, pointwise exchange
CheckResult verify_abelian(int max_order = 64);   // subgroup lattices and annihilators
CheckResult verify_oracle();                      // enumeration vs subset filter
CheckResult verify_factorization();               // factorize lands in the right classes

std::vector<CheckResult> run_all_checks();

// The lattices every WFS/duality check runs over, with their dualities.
struct TestLattice {
  std::string name;
  PosetPtr poset;
  Duality duality;
};
std::vector<TestLattice> standard_test_lattices();

}  // namespace transys
