#include "lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <stdexcept>

#include "dense_eig.hpp"

namespace motzkin::detail {

void csr_apply(const Csr& m, const double* x, double* y) {
  const std::int64_t n = m.dim;
  for (std::int64_t r = 0; r < n; ++r) {
    double acc = 0.0;
    const std::int64_t begin = m.row_ptr[static_cast<std::size_t>(r)];
    const std::int64_t end = m.row_ptr[static_cast<std::size_t>(r) + 1];
    for (std::int64_t k = begin; k < end; ++k) {
      acc += m.vals[static_cast<std::size_t>(k)] *
             x[m.cols[static_cast<std::size_t>(k)]];
    }
    y[r] = acc;
  }
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

void axpy(double c, const std::vector<double>& x, std::vector<double>& y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

// Remove components of w along the deflation set and the current basis.
// Two classical Gram-Schmidt passes give full reorthogonalization.
void orthogonalize(std::vector<double>& w,
                   const std::vector<std::vector<double>>& deflate,
                   const std::vector<std::vector<double>>& basis,
                   std::size_t basis_count) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& d : deflate) axpy(-dot(d, w), d, w);
    for (std::size_t i = 0; i < basis_count; ++i) {
      axpy(-dot(basis[i], w), basis[i], w);
    }
  }
}

}  // namespace

LanczosResult lanczos_smallest(
    const std::function<void(const double*, double*)>& matvec,
    std::int64_t dim, const std::vector<std::vector<double>>& deflate,
    const LanczosOptions& opts) {
  if (dim <= 0) {
    throw std::invalid_argument("lanczos_smallest: dimension must be positive");
  }
  const std::int64_t remaining = dim - static_cast<std::int64_t>(deflate.size());
  if (remaining <= 0) {
    throw std::invalid_argument(
        "lanczos_smallest: deflation space exhausts the operator domain");
  }
  const int m = static_cast<int>(
      std::min<std::int64_t>(std::max(opts.max_basis, 8), remaining));
  const int keep =
      std::max(1, std::min(opts.keep, m - 2 > 0 ? m - 2 : 1));

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const std::size_t n = static_cast<std::size_t>(dim);

  std::vector<std::vector<double>> basis;
  basis.reserve(static_cast<std::size_t>(m) + 1);
  Eigen::MatrixXd proj = Eigen::MatrixXd::Zero(m, m);
  std::vector<double> work(n, 0.0);

  LanczosResult result;
  double best = 0.0;
  double best_bound = std::numeric_limits<double>::infinity();
  bool have_best = false;
  double scale_est = 1.0;

  auto fresh_vector = [&](std::size_t basis_count) -> std::vector<double> {
    for (int attempt = 0; attempt < 8; ++attempt) {
      std::vector<double> v(n);
      for (auto& x : v) x = gauss(rng);
      orthogonalize(v, deflate, basis, basis_count);
      const double nrm = norm(v);
      if (nrm > 1e-8 * std::sqrt(static_cast<double>(n))) {
        for (auto& x : v) x /= nrm;
        return v;
      }
    }
    return {};
  };

  {
    auto v0 = fresh_vector(0);
    if (v0.empty()) {
      throw std::runtime_error(
          "lanczos_smallest: could not build a start vector");
    }
    basis.push_back(std::move(v0));
  }

  bool subspace_closed = false;
  for (int cycle = 0; cycle < opts.max_cycles; ++cycle) {
    // Extend the basis until m vectors have complete projected columns.
    double beta_res = 0.0;
    std::vector<double> residual_dir;
    int nb = static_cast<int>(basis.size());
    while (true) {
      const int src = nb - 1;
      matvec(basis[static_cast<std::size_t>(src)].data(), work.data());
      ++result.iterations;
      // Projected column: honest inner products against the whole basis.
      for (int i = 0; i < nb; ++i) {
        const double c = dot(basis[static_cast<std::size_t>(i)], work);
        proj(i, src) = c;
        proj(src, i) = c;
        scale_est = std::max(scale_est, std::abs(c));
      }
      for (int i = 0; i < nb; ++i) {
        axpy(-proj(i, src), basis[static_cast<std::size_t>(i)], work);
      }
      for (const auto& d : deflate) axpy(-dot(d, work), d, work);
      orthogonalize(work, deflate, basis, static_cast<std::size_t>(nb));
      const double beta = norm(work);
      if (nb == m || nb == static_cast<int>(remaining)) {
        beta_res = beta;
        if (beta > 1e-13 * scale_est) {
          residual_dir = work;
          for (auto& x : residual_dir) x /= beta;
        }
        break;
      }
      if (beta <= 1e-13 * scale_est) {
        // The Krylov space closed early; inject a fresh direction.
        auto v = fresh_vector(static_cast<std::size_t>(nb));
        if (v.empty()) {
          subspace_closed = true;
          beta_res = 0.0;
          break;
        }
        basis.push_back(std::move(v));
        ++nb;
        continue;
      }
      std::vector<double> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = work[i] / beta;
      basis.push_back(std::move(v));
      ++nb;
    }

    const auto eig = eig_sym(proj.topLeftCorner(nb, nb));
    const double cand = eig.values(0);
    double res = beta_res * std::abs(eig.vectors(nb - 1, 0));
    if (subspace_closed || nb == static_cast<int>(remaining)) {
      res = std::min(res, 1e-13 * scale_est);
    }
    double sep = scale_est;
    if (nb > 1) sep = std::max(eig.values(1) - eig.values(0), 1e-300);
    const double bound = std::min(res, res * res / sep);
    if (!have_best || bound < best_bound) {
      have_best = true;
      best = cand;
      best_bound = bound;
    }
    const double thresh = opts.rel_tol * std::max(std::abs(cand), 1e-10);
    if (bound <= thresh || subspace_closed ||
        nb == static_cast<int>(remaining)) {
      result.eigenvalue = cand;
      result.converged = bound <= thresh || subspace_closed ||
                         nb == static_cast<int>(remaining);
      result.error_bound = bound;
      return result;
    }

    // Thick restart: keep the lowest Ritz vectors plus the residual direction.
    const int kkeep = std::min(keep, nb - 1);
    std::vector<std::vector<double>> kept;
    kept.reserve(static_cast<std::size_t>(kkeep) + 1);
    for (int j = 0; j < kkeep; ++j) {
      std::vector<double> u(n, 0.0);
      for (int i = 0; i < nb; ++i) {
        axpy(eig.vectors(i, j), basis[static_cast<std::size_t>(i)], u);
      }
      kept.push_back(std::move(u));
    }
    // Re-orthonormalize the kept set for numerical hygiene.
    std::vector<std::vector<double>> clean;
    clean.reserve(kept.size() + 1);
    std::vector<double> kept_values;
    for (int j = 0; j < kkeep; ++j) {
      auto& u = kept[static_cast<std::size_t>(j)];
      orthogonalize(u, deflate, clean, clean.size());
      const double nrm = norm(u);
      if (nrm > 1e-8) {
        for (auto& x : u) x /= nrm;
        clean.push_back(std::move(u));
        kept_values.push_back(eig.values(j));
      }
    }
    basis = std::move(clean);
    proj.setZero();
    for (std::size_t j = 0; j < basis.size(); ++j) {
      proj(static_cast<int>(j), static_cast<int>(j)) = kept_values[j];
    }
    if (!residual_dir.empty()) {
      orthogonalize(residual_dir, deflate, basis, basis.size());
      const double nrm = norm(residual_dir);
      if (nrm > 1e-10) {
        for (auto& x : residual_dir) x /= nrm;
        basis.push_back(std::move(residual_dir));
      }
    }
    if (basis.empty() || basis.size() == static_cast<std::size_t>(kkeep)) {
      auto v = fresh_vector(basis.size());
      if (v.empty()) {
        subspace_closed = true;
      } else {
        basis.push_back(std::move(v));
      }
    }
    if (subspace_closed) {
      result.eigenvalue = best;
      result.converged = true;
      result.error_bound = best_bound;
      return result;
    }
  }

  result.eigenvalue = best;
  result.converged = false;
  result.error_bound = best_bound;
  return result;
}

}  // namespace motzkin::detail
