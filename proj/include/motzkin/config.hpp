#pragma once

#include <string>

namespace motzkin::config {

// Default size guards (chain length 2n unless noted).  The environment
// variable MOTZKIN_MAX_2N, when set, replaces every 2n guard at the
// caller's risk.
inline constexpr int kBruteForceMaxSteps = 18;
inline constexpr int kHeightMax2n = 400;
inline constexpr int kTwoPointMax2n = 300;
inline constexpr int kStateMax2n = 14;
inline constexpr int kFrustrationMax2n = 12;
inline constexpr int kDenseMax2n = 8;
inline constexpr int kRegionMaxSites = 6;

// Crossover between exact-rational and log-sum-exp float evaluation of
// the "exact" correlation sums when the caller asks for automatic mode.
int rational_crossover_two_n();
void set_rational_crossover_two_n(int two_n);

// Guard limit after applying the MOTZKIN_MAX_2N override.
int effective_two_n_limit(int default_limit);

// Throws std::domain_error naming the operation and the limit.
void check_two_n(int two_n, int default_limit, const std::string& op);

}  // namespace motzkin::config
