#pragma once

#include <motzkin/bignum.hpp>

namespace motzkin {

// Endpoints of a height-walk: L steps from height m1 to height m2,
// constrained to stay >= 0 throughout.
struct WalkEndpoints {
  int steps = 0;
  int start_height = 0;
  int end_height = 0;
};

// Binomial C(n, k); 0 when k < 0 or k > n.  Backed by a thread-safe
// Pascal-triangle cache.
Count binomial(int n, int k);
Count factorial(int n);

// Number of +-1 step walks between the endpoints staying nonnegative:
// C(L, (L+|m2-m1|)/2) - C(L, (L+m2+m1)/2 + 1), zero on parity mismatch
// or |m2-m1| > L.
Count dyck_count(const WalkEndpoints& e);

// Number of {+1,0,-1} step walks between the endpoints staying
// nonnegative: sum_k C(L,k) * dyck_count(L-k, m1, m2) over flat-step
// placements.
Count motzkin_count(const WalkEndpoints& e);

// M_{2n,0,0}: walks returning to 0.
Count motzkin_number(int two_n);

Count catalan(int i);

// Independent oracle: explicit depth-first enumeration, pruned only on
// height < 0.  allow_flat=false walks use +-1 steps, else {+1,0,-1}.
// Rejects steps > 18.
Count brute_force_count(const WalkEndpoints& e, bool allow_flat);

// Upper bound L*sqrt(b/2)*(2/3)^{b+1} on the fraction of walks through
// a length-L window at distance b from the ends that touch height 0.
double bad_walk_fraction_bound(int b, int L);

}  // namespace motzkin
