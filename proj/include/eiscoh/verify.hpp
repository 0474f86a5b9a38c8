// Grid verification: sweeps all dominant integral weights with fundamental
// coordinates n_i <= N and checks the engine against independent references
// (the classical closed forms for mu_w/d_chi, the Euler-characteristic
// identity, the dimension formula, and the structural profile invariants).
#pragma once

#include "eiscoh/tables.hpp"
#include "eiscoh/weights.hpp"
#include "eiscoh/weyl.hpp"

#include <string>
#include <vector>

namespace eiscoh {

struct CheckResult {
  std::string check;
  long weights_scanned = 0;
  long failures = 0;
  std::string first_failure; // "n=(a,b,c): what" for the first failing weight
};

// closed forms of the classical tables, in canonical W^P order; these are
// the reference the engine is compared against (the engine never reads them)
struct MuReference {
  WeylElement w;
  AffineForm m1, m3;
};
struct DchiReference {
  WeylElement w;
  AffineForm s;
};
const std::vector<MuReference> &mu_reference();
const std::vector<DchiReference> &dchi_reference();

// mu_w against the closed forms, all w in W^P({1,3}), grid n_i <= N
CheckResult check_mu_table(int max_n);

// d_chi against the closed forms plus the three sign symmetries
// d(id) = -d(w2w1w3w2), d(w2) = -d(w2w1w3), d(w2w1) = -d(w2w3)
CheckResult check_dchi_table(int max_n);

// Euler-characteristic identity between the Freudenthal route and the
// Kostant route, grid n_i <= N
CheckResult check_euler(int max_n);

// character mass from Freudenthal vs the Weyl dimension formula
CheckResult check_freudenthal(int max_n);

// structural invariants of full_report across the grid
CheckResult check_profile(int max_n);

// all of the above with the standard caps (Euler at min(N,4), Freudenthal at
// min(N,5)); order is fixed
std::vector<CheckResult> run_all_checks(int max_n);

} // namespace eiscoh
