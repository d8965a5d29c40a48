#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace motzkin::detail {

// Compressed sparse row matrix over doubles, int32 column indices.
struct Csr {
  std::int64_t dim = 0;
  std::vector<std::int64_t> row_ptr;
  std::vector<std::int32_t> cols;
  std::vector<double> vals;
};

void csr_apply(const Csr& m, const double* x, double* y);

struct LanczosOptions {
  int max_basis = 48;       // Krylov subspace dimension before a restart
  int keep = 12;            // Ritz pairs retained through a thick restart
  int max_cycles = 500;     // restart cycles before giving up
  double rel_tol = 1e-8;    // relative accuracy of the returned eigenvalue
  std::uint64_t seed = 20240811;
};

struct LanczosResult {
  double eigenvalue = 0.0;
  bool converged = false;
  int iterations = 0;       // total operator applications
  double error_bound = 0.0; // a posteriori bound on |eigenvalue - exact|
};

// Smallest eigenvalue of a symmetric operator restricted to the orthogonal
// complement of `deflate` (each deflation vector must be normalized and the
// operator must map the complement to itself). Thick-restart Lanczos with
// full reorthogonalization.
LanczosResult lanczos_smallest(
    const std::function<void(const double*, double*)>& matvec,
    std::int64_t dim, const std::vector<std::vector<double>>& deflate,
    const LanczosOptions& opts = {});

}  // namespace motzkin::detail
