#pragma once

#include <string>
#include <vector>

namespace motzkin {

// Inclusive integer range a:b:step; default-constructed ranges are
// treated as unset.
struct Range {
  int begin = 0;
  int end = -1;
  int step = 1;

  bool is_set() const { return end >= begin && step >= 1; }
  std::vector<int> values() const;
};

struct SweepRequest {
  // height|sz|two_point|szsz|cut_entropy|cut_renyi|block_entropy|
  // block_renyi|spectrum|gap|thermal
  std::string quantity;
  int two_n = 0;        // chain length; 0 = unset
  Range two_n_range;    // used by gap
  Range n1_range;
  Range l_range;
  int n1 = 0;           // single-site alternatives to the ranges
  int n2 = 0;
  std::vector<double> kappas;
  double beta = 0.0;
  bool beta_set = false;
  std::string format = "csv";  // csv|json
  std::string out;             // empty writes the data to stdout, no sidecar
};

// Runs the sweep and writes the data file plus a <out>.meta.json sidecar
// carrying the request and any per-point size-guard skips.  Returns 0 on
// success (skipped points included); throws std::invalid_argument on a
// malformed request.  Output bytes depend only on the request.
int run_sweep(const SweepRequest& req);

}  // namespace motzkin
