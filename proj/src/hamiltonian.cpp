#include "motzkin/hamiltonian.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <istream>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dense_eig.hpp"
#include "lanczos.hpp"
#include "motzkin/bignum.hpp"
#include "motzkin/config.hpp"
#include "motzkin/walks.hpp"

namespace motzkin {
namespace {

using detail::Csr;
using detail::EigResult;

std::int64_t pow3(int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r *= 3;
  return r;
}

// Digit of 1-based site j inside configuration index x (site 1 is the
// most significant digit; digit u=0, 0=1, d=2, spin = 1 - digit).
int digit_at(std::int64_t x, int site, int two_n) {
  return static_cast<int>((x / pow3(two_n - site)) % 3);
}

// Adjacent-pair projector in the pair basis q = 3*digit_left +
// digit_right:  q=0 uu, 1 u0, 2 ud, 3 0u, 4 00, 5 0d, 6 du, 7 d0, 8 dd.
// The three rank-1 projectors |D><D|, |U><U|, |phi><phi| built from
// (|0d> - |d0>)/sqrt(2), (|u0> - |0u>)/sqrt(2), (|00> - |ud>)/sqrt(2)
// sum to diagonal +1/2 on {1,2,3,4,5,7} and off-diagonal -1/2 on the
// swap partners (1,3), (2,4), (5,7).
constexpr double kPairDiag[9] = {0.0, 0.5, 0.5, 0.5, 0.5, 0.5,
                                 0.0, 0.5, 0.0};
constexpr int kPairPartner[9] = {-1, 3, 4, 1, 2, 7, -1, 5, -1};

using Mat3 = Eigen::Matrix3d;
using Mat9 = Eigen::Matrix<double, 9, 9>;

Mat9 kron(const Mat3& a, const Mat3& b) {
  Mat9 out = Mat9::Zero();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) {
          out(3 * i + k, 3 * j + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

// Assemble sum_j (pair matrix on sites j, j+1) plus single-site terms on
// the first and last site into a sorted triple list.
SparseOperator assemble(int two_n, const Mat9& pair, const Mat3& first,
                        const Mat3& last) {
  const std::int64_t dim = pow3(two_n);
  SparseOperator op;
  op.dimension = dim;
  std::vector<double> diag(static_cast<std::size_t>(dim), 0.0);
  std::vector<Triple>& triples = op.entries;

  for (int j = 1; j < two_n; ++j) {
    const std::int64_t s = pow3(two_n - j - 1);
    const std::int64_t blocks = pow3(j - 1);
    for (int q = 0; q < 9; ++q) {
      for (int qp = 0; qp < 9; ++qp) {
        const double v = pair(q, qp);
        if (v == 0.0) continue;
        const std::int64_t shift = static_cast<std::int64_t>(qp - q) * s;
        for (std::int64_t b = 0; b < blocks; ++b) {
          const std::int64_t base = b * 9 * s + q * s;
          if (q == qp) {
            for (std::int64_t r = 0; r < s; ++r) {
              diag[static_cast<std::size_t>(base + r)] += v;
            }
          } else {
            for (std::int64_t r = 0; r < s; ++r) {
              triples.push_back(Triple{base + r, base + r + shift, v});
            }
          }
        }
      }
    }
  }

  const std::int64_t s1 = dim / 3;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const double v = first(a, b);
      if (v == 0.0) continue;
      if (a == b) {
        for (std::int64_t r = 0; r < s1; ++r) {
          diag[static_cast<std::size_t>(a * s1 + r)] += v;
        }
      } else {
        for (std::int64_t r = 0; r < s1; ++r) {
          triples.push_back(Triple{a * s1 + r, b * s1 + r, v});
        }
      }
    }
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const double v = last(a, b);
      if (v == 0.0) continue;
      if (a == b) {
        for (std::int64_t l = 0; l < dim / 3; ++l) {
          diag[static_cast<std::size_t>(l * 3 + a)] += v;
        }
      } else {
        for (std::int64_t l = 0; l < dim / 3; ++l) {
          triples.push_back(Triple{l * 3 + a, l * 3 + b, v});
        }
      }
    }
  }

  for (std::int64_t x = 0; x < dim; ++x) {
    const double v = diag[static_cast<std::size_t>(x)];
    if (v != 0.0) triples.push_back(Triple{x, x, v});
  }
  std::sort(triples.begin(), triples.end(),
            [](const Triple& a, const Triple& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
  return op;
}

// y = H x without materializing the operator.
void apply_h(int two_n, const double* x, double* y) {
  const std::int64_t dim = pow3(two_n);
  std::fill(y, y + dim, 0.0);
  for (int j = 1; j < two_n; ++j) {
    const std::int64_t s = pow3(two_n - j - 1);
    const std::int64_t blocks = pow3(j - 1);
    for (std::int64_t b = 0; b < blocks; ++b) {
      const std::int64_t base = b * 9 * s;
      for (int q = 0; q < 9; ++q) {
        const int p = kPairPartner[q];
        if (p < 0) continue;
        const std::int64_t xq = base + q * s;
        const std::int64_t shift = static_cast<std::int64_t>(p - q) * s;
        for (std::int64_t r = 0; r < s; ++r) {
          y[xq + r] += 0.5 * x[xq + r] - 0.5 * x[xq + shift + r];
        }
      }
    }
  }
  const std::int64_t s1 = dim / 3;
  for (std::int64_t r = 0; r < s1; ++r) y[2 * s1 + r] += x[2 * s1 + r];
  for (std::int64_t x0 = 0; x0 < dim; x0 += 3) y[x0] += x[x0];
}

// y = Pi_{j,j+1} x for one bond.
void apply_bond(int two_n, int j, const double* x, double* y) {
  const std::int64_t dim = pow3(two_n);
  std::fill(y, y + dim, 0.0);
  const std::int64_t s = pow3(two_n - j - 1);
  const std::int64_t blocks = pow3(j - 1);
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::int64_t base = b * 9 * s;
    for (int q = 0; q < 9; ++q) {
      const int p = kPairPartner[q];
      if (p < 0) continue;
      const std::int64_t xq = base + q * s;
      const std::int64_t shift = static_cast<std::int64_t>(p - q) * s;
      for (std::int64_t r = 0; r < s; ++r) {
        y[xq + r] += 0.5 * x[xq + r] - 0.5 * x[xq + shift + r];
      }
    }
  }
}

void apply_boundary(int two_n, const double* x, double* y) {
  const std::int64_t dim = pow3(two_n);
  std::fill(y, y + dim, 0.0);
  const std::int64_t s1 = dim / 3;
  for (std::int64_t r = 0; r < s1; ++r) y[2 * s1 + r] += x[2 * s1 + r];
  for (std::int64_t x0 = 0; x0 < dim; x0 += 3) y[x0] += x[x0];
}

void check_state(const StateVector& state, const std::string& op) {
  if (state.two_n < 1) {
    throw std::invalid_argument(op + ": chain length must be positive");
  }
  if (static_cast<std::int64_t>(state.amplitudes.size()) !=
      pow3(state.two_n)) {
    throw std::invalid_argument(op + ": amplitude count does not match 3^(2n)");
  }
}

// ---------------------------------------------------------------------
// Charge sectors.  The total spin Q = sum_j (1 - digit_j) commutes with
// H, so the spectrum splits over eigenspaces of Q; reversing the chain
// and exchanging u <-> d maps sector q to sector -q without changing H,
// hence only q >= 0 needs solving.

std::vector<std::int64_t> sector_states(int two_n, int charge) {
  std::vector<std::int64_t> out;
  std::function<void(int, int, std::int64_t)> rec = [&](int site, int sum,
                                                        std::int64_t base) {
    const int remaining = two_n - site;
    if (std::abs(charge - sum) > remaining) return;
    if (site == two_n) {
      out.push_back(base);
      return;
    }
    rec(site + 1, sum + 1, base * 3);      // digit u
    rec(site + 1, sum, base * 3 + 1);      // digit 0
    rec(site + 1, sum - 1, base * 3 + 2);  // digit d
  };
  rec(0, 0, 0);
  return out;
}

Csr build_sector_csr(int two_n, const std::vector<std::int64_t>& states) {
  const int bonds = two_n - 1;
  Csr m;
  m.dim = static_cast<std::int64_t>(states.size());
  m.row_ptr.assign(states.size() + 1, 0);
  m.vals.reserve(states.size() * static_cast<std::size_t>(bonds + 1));
  m.cols.reserve(states.size() * static_cast<std::size_t>(bonds + 1));
  std::vector<int> d(static_cast<std::size_t>(two_n));
  std::array<std::pair<std::int32_t, double>, 32> row{};
  for (std::size_t i = 0; i < states.size(); ++i) {
    const std::int64_t g = states[i];
    std::int64_t t = g;
    for (int k = two_n - 1; k >= 0; --k) {
      d[static_cast<std::size_t>(k)] = static_cast<int>(t % 3);
      t /= 3;
    }
    double diag = 0.0;
    int cnt = 0;
    for (int j = 0; j < bonds; ++j) {
      const int q = 3 * d[static_cast<std::size_t>(j)] +
                    d[static_cast<std::size_t>(j) + 1];
      diag += kPairDiag[q];
      const int p = kPairPartner[q];
      if (p < 0) continue;
      const std::int64_t stride = pow3(two_n - j - 2);
      const std::int64_t g2 = g + static_cast<std::int64_t>(p - q) * stride;
      const auto it = std::lower_bound(states.begin(), states.end(), g2);
      if (it == states.end() || *it != g2) {
        throw std::logic_error("charge sector is not closed under the bond map");
      }
      row[static_cast<std::size_t>(cnt++)] = {
          static_cast<std::int32_t>(it - states.begin()), -0.5};
    }
    if (d[0] == 2) diag += 1.0;
    if (d[static_cast<std::size_t>(two_n) - 1] == 0) diag += 1.0;
    if (diag != 0.0) {
      row[static_cast<std::size_t>(cnt++)] = {static_cast<std::int32_t>(i),
                                              diag};
    }
    std::sort(row.begin(), row.begin() + cnt);
    for (int k = 0; k < cnt; ++k) {
      m.cols.push_back(row[static_cast<std::size_t>(k)].first);
      m.vals.push_back(row[static_cast<std::size_t>(k)].second);
    }
    m.row_ptr[i + 1] = static_cast<std::int64_t>(m.vals.size());
  }
  return m;
}

// Height-walk indicator restricted to the zero-charge sector, normalized.
std::vector<double> walk_vector_in_sector(
    int two_n, const std::vector<std::int64_t>& states) {
  std::vector<double> g(states.size(), 0.0);
  std::size_t count = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    std::int64_t t = states[i];
    int h = 0;
    bool ok = true;
    std::int64_t p = pow3(two_n - 1);
    for (int site = 0; site < two_n; ++site) {
      const int dg = static_cast<int>((t / p) % 3);
      p /= 3;
      h += 1 - dg;
      if (h < 0) {
        ok = false;
        break;
      }
    }
    if (ok && h == 0) {
      g[i] = 1.0;
      ++count;
    }
  }
  const double inv = 1.0 / std::sqrt(static_cast<double>(count));
  for (auto& x : g) x *= inv;
  return g;
}

Eigen::MatrixXd densify(const Csr& m) {
  Eigen::MatrixXd a =
      Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m.dim),
                            static_cast<Eigen::Index>(m.dim));
  for (std::int64_t r = 0; r < m.dim; ++r) {
    for (std::int64_t k = m.row_ptr[static_cast<std::size_t>(r)];
         k < m.row_ptr[static_cast<std::size_t>(r) + 1]; ++k) {
      a(static_cast<Eigen::Index>(r),
        static_cast<Eigen::Index>(m.cols[static_cast<std::size_t>(k)])) =
          m.vals[static_cast<std::size_t>(k)];
    }
  }
  return a;
}

Eigen::MatrixXd densify_op(const SparseOperator& op) {
  Eigen::MatrixXd a =
      Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(op.dimension),
                            static_cast<Eigen::Index>(op.dimension));
  for (const auto& t : op.entries) {
    a(static_cast<Eigen::Index>(t.row), static_cast<Eigen::Index>(t.col)) +=
        t.value;
  }
  return a;
}

const EigResult& cached_dense_eig(int two_n) {
  static std::map<int, EigResult> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(two_n);
  if (it == cache.end()) {
    const Eigen::MatrixXd h = densify_op(build_hamiltonian(two_n));
    it = cache.emplace(two_n, detail::eig_sym(h)).first;
  }
  return it->second;
}

}  // namespace

StateVector build_motzkin_state(int two_n) {
  config::check_two_n(two_n, config::kStateMax2n, "build_motzkin_state");
  const std::int64_t dim = pow3(two_n);
  StateVector st;
  st.two_n = two_n;
  st.amplitudes.assign(static_cast<std::size_t>(dim), 0.0);
  const double norm =
      ratio_as_double(motzkin_number(two_n), Count(1));
  const double amp = 1.0 / std::sqrt(norm);
  std::function<void(int, int, std::int64_t)> rec = [&](int site, int h,
                                                        std::int64_t base) {
    if (h > two_n - site) return;  // cannot return to height 0
    if (site == two_n) {
      if (h == 0) st.amplitudes[static_cast<std::size_t>(base)] = amp;
      return;
    }
    rec(site + 1, h + 1, base * 3);
    rec(site + 1, h, base * 3 + 1);
    if (h > 0) rec(site + 1, h - 1, base * 3 + 2);
  };
  rec(0, 0, 0);
  return st;
}

SparseOperator build_hamiltonian(int two_n) {
  config::check_two_n(two_n, config::kStateMax2n, "build_hamiltonian");
  Mat9 pair = Mat9::Zero();
  for (int q = 0; q < 9; ++q) {
    pair(q, q) = kPairDiag[q];
    const int p = kPairPartner[q];
    if (p >= 0) pair(q, p) = -0.5;
  }
  Mat3 first = Mat3::Zero();
  first(2, 2) = 1.0;  // |d><d| on site 1
  Mat3 last = Mat3::Zero();
  last(0, 0) = 1.0;  // |u><u| on site 2n
  return assemble(two_n, pair, first, last);
}

SparseOperator build_hamiltonian_spin(int two_n) {
  config::check_two_n(two_n, config::kStateMax2n, "build_hamiltonian_spin");
  const double rt2 = std::sqrt(2.0);
  const double coef = 1.0 / (2.0 * rt2);
  Mat3 id = Mat3::Identity();
  Mat3 sz = Mat3::Zero();
  sz(0, 0) = 1.0;
  sz(2, 2) = -1.0;
  Mat3 sp = Mat3::Zero();  // S^+ = s^x + i s^y
  sp(0, 1) = rt2;
  sp(1, 2) = rt2;
  Mat3 sm = sp.transpose();  // S^-

  // Spin-1 single-site transition operators as products of s^z and S^+-.
  const Mat3 p00 = id - sz * sz;                    // |0><0|
  const Mat3 p_uu = 0.5 * (id + sz) * sz;           // |1><1|
  const Mat3 p_dd = 0.5 * (sz - id) * sz;           // |-1><-1|
  const Mat3 p_0u = coef * sm * (id + sz) * sz;     // |0><1|
  const Mat3 p_u0 = coef * sz * (id + sz) * sp;     // |1><0|
  const Mat3 p_0d = coef * sp * (sz - id) * sz;     // |0><-1|
  const Mat3 p_d0 = coef * sz * (sz - id) * sm;     // |-1><0|

  Mat9 pair =
      0.5 * (kron(p00, id) + kron(p_uu, p00 + p_dd) + kron(p_dd, p00));
  const Mat9 hop =
      kron(p_u0, p_0u) + kron(p_d0, p_0d) + kron(p_u0, p_d0);
  pair -= 0.5 * (hop + hop.transpose());

  const Mat3 first = 0.5 * (sz - id) * sz;  // |d><d| on site 1
  const Mat3 last = 0.5 * (id + sz) * sz;   // |u><u| on site 2n
  return assemble(two_n, pair, first, last);
}

std::vector<double> apply(const SparseOperator& op,
                          const std::vector<double>& x) {
  if (static_cast<std::int64_t>(x.size()) != op.dimension) {
    throw std::invalid_argument("apply: vector length does not match operator");
  }
  std::vector<double> y(x.size(), 0.0);
  for (const auto& t : op.entries) {
    y[static_cast<std::size_t>(t.row)] +=
        t.value * x[static_cast<std::size_t>(t.col)];
  }
  return y;
}

FrustrationReport verify_frustration_free(int two_n) {
  config::check_two_n(two_n, config::kFrustrationMax2n,
                      "verify_frustration_free");
  const StateVector st = build_motzkin_state(two_n);
  const std::int64_t dim = pow3(two_n);
  std::vector<double> y(static_cast<std::size_t>(dim));
  FrustrationReport report;
  double worst = 0.0;
  for (int j = 1; j < two_n; ++j) {
    apply_bond(two_n, j, st.amplitudes.data(), y.data());
    double nrm2 = 0.0;
    for (double v : y) nrm2 += v * v;
    const double r = std::sqrt(nrm2);
    report.bond_residuals.push_back(r);
    worst = std::max(worst, r);
  }
  apply_boundary(two_n, st.amplitudes.data(), y.data());
  double nrm2 = 0.0;
  for (double v : y) nrm2 += v * v;
  report.boundary_residual = std::sqrt(nrm2);
  worst = std::max(worst, report.boundary_residual);
  report.frustration_free = worst < 1e-12;
  report.gap = spectral_gap(two_n);
  report.unique_ground_state = report.gap > 1e-8;
  return report;
}

GapResult spectral_gap_result(int two_n) {
  config::check_two_n(two_n, config::kStateMax2n, "spectral_gap");
  static std::map<int, GapResult> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    const auto it = cache.find(two_n);
    if (it != cache.end()) return it->second;
  }

  GapResult out;
  if (two_n <= 6) {
    const EigResult eig = detail::eig_sym(densify_op(build_hamiltonian(two_n)));
    out.gap = eig.values(1);
    out.converged = true;
    out.iterations = 0;
    out.error_bound =
        1e-13 * std::max(1.0, std::abs(eig.values(eig.values.size() - 1)));
  } else {
    double best = std::numeric_limits<double>::infinity();
    double best_bound = 0.0;
    bool all_converged = true;
    int iterations = 0;
    for (int s = 0; s <= two_n; ++s) {
      const auto states = sector_states(two_n, s);
      if (states.empty()) continue;
      const Csr csr = build_sector_csr(two_n, states);
      double cand;
      double cand_bound;
      if (csr.dim <= 1500) {
        const EigResult eig = detail::eig_sym(densify(csr));
        cand = s == 0 ? eig.values(1) : eig.values(0);
        cand_bound = 1e-13 * std::max(1.0, std::abs(eig.values(
                                               eig.values.size() - 1)));
      } else {
        std::vector<std::vector<double>> deflate;
        if (s == 0) deflate.push_back(walk_vector_in_sector(two_n, states));
        detail::LanczosOptions opts;
        opts.max_basis = 60;
        opts.keep = 16;
        opts.max_cycles = 600;
        opts.rel_tol = 1e-8;
        opts.seed = 20240811 + static_cast<std::uint64_t>(s);
        const detail::LanczosResult lr = detail::lanczos_smallest(
            [&csr](const double* xin, double* yout) {
              detail::csr_apply(csr, xin, yout);
            },
            csr.dim, deflate, opts);
        cand = lr.eigenvalue;
        cand_bound = lr.error_bound;
        iterations += lr.iterations;
        all_converged = all_converged && lr.converged;
      }
      if (cand < best) {
        best = cand;
        best_bound = cand_bound;
      }
    }
    out.gap = best;
    out.converged = all_converged;
    out.iterations = iterations;
    out.error_bound = best_bound;
  }

  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(two_n, out);
  return out;
}

double spectral_gap(int two_n) {
  const GapResult r = spectral_gap_result(two_n);
  if (!r.converged) {
    throw std::runtime_error("spectral_gap: eigensolver did not converge after " +
                             std::to_string(r.iterations) + " iterations");
  }
  return r.gap;
}

GapFit fit_gap_exponent(const std::vector<int>& sizes) {
  std::vector<double> gaps;
  gaps.reserve(sizes.size());
  for (const int s : sizes) gaps.push_back(spectral_gap(s));
  return fit_gap_exponent(sizes, gaps);
}

GapFit fit_gap_exponent(const std::vector<int>& sizes,
                        const std::vector<double>& gaps) {
  if (sizes.size() != gaps.size()) {
    throw std::invalid_argument("fit_gap_exponent: size/gap count mismatch");
  }
  if (sizes.size() < 4) {
    throw std::invalid_argument(
        "fit_gap_exponent: need at least four sizes for a meaningful fit");
  }
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) {
      throw std::invalid_argument("fit_gap_exponent: sizes must be positive");
    }
    if (i > 0 && sizes[i] <= sizes[i - 1]) {
      throw std::invalid_argument(
          "fit_gap_exponent: sizes must be strictly increasing");
    }
    if (!(gaps[i] > 0.0)) {
      throw std::invalid_argument("fit_gap_exponent: gaps must be positive");
    }
  }
  GapFit fit;
  fit.sizes = sizes;
  fit.gaps = gaps;
  const std::size_t k = sizes.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::vector<double> xs(k), ys(k);
  for (std::size_t i = 0; i < k; ++i) {
    xs[i] = std::log(sizes[i] / 2.0);
    ys[i] = std::log(gaps[i]);
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double n = static_cast<double>(k);
  const double denom = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;
  fit.exponent = -slope;
  double ss = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double r = ys[i] - intercept - slope * xs[i];
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

double spin_expectation(const StateVector& state, int site, char axis) {
  check_state(state, "spin_expectation");
  if (site < 1 || site > state.two_n) {
    throw std::invalid_argument("spin_expectation: site out of range");
  }
  if (axis != 'x' && axis != 'y' && axis != 'z') {
    throw std::invalid_argument("spin_expectation: axis must be 'x', 'y' or 'z'");
  }
  const int two_n = state.two_n;
  const std::int64_t s = pow3(two_n - site);
  const std::int64_t blocks = pow3(site - 1);
  const double* psi = state.amplitudes.data();
  const double inv_rt2 = 1.0 / std::sqrt(2.0);
  double acc = 0.0;
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::int64_t base = b * 3 * s;
    for (std::int64_t r = 0; r < s; ++r) {
      const double a0 = psi[base + r];          // digit u, spin +1
      const double a1 = psi[base + s + r];      // digit 0, spin 0
      const double a2 = psi[base + 2 * s + r];  // digit d, spin -1
      switch (axis) {
        case 'z':
          acc += a0 * a0 - a2 * a2;
          break;
        case 'x':
          // (1/sqrt2) (|u><0| + |0><u| + |0><d| + |d><0|)
          acc += inv_rt2 * (2.0 * a0 * a1 + 2.0 * a1 * a2);
          break;
        case 'y':
          // (i/sqrt2) (|0><u| - |u><0| + |d><0| - |0><d|); for real
          // amplitudes the antisymmetric contraction cancels exactly and
          // the Hermitian expectation value is the remaining real part.
          acc += inv_rt2 * ((a1 * a0 - a0 * a1) + (a2 * a1 - a1 * a2));
          break;
        default:
          break;
      }
    }
  }
  return acc;
}

double conserved_charge_check(int two_n) {
  config::check_two_n(two_n, config::kFrustrationMax2n,
                      "conserved_charge_check");
  const std::int64_t dim = pow3(two_n);
  const std::size_t n = static_cast<std::size_t>(dim);
  std::vector<double> q(n);
  for (std::int64_t x = 0; x < dim; ++x) {
    std::int64_t t = x;
    int charge = 0;
    for (int k = 0; k < two_n; ++k) {
      charge += 1 - static_cast<int>(t % 3);
      t /= 3;
    }
    q[static_cast<std::size_t>(x)] = static_cast<double>(charge);
  }
  std::mt19937_64 rng(987654321);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> v(n), qv(n), hv(n), hqv(n), qhv(n);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    double nrm2 = 0.0;
    for (auto& x : v) {
      x = gauss(rng);
      nrm2 += x * x;
    }
    const double inv = 1.0 / std::sqrt(nrm2);
    for (auto& x : v) x *= inv;
    for (std::size_t i = 0; i < n; ++i) qv[i] = q[i] * v[i];
    apply_h(two_n, qv.data(), hqv.data());
    apply_h(two_n, v.data(), hv.data());
    for (std::size_t i = 0; i < n; ++i) qhv[i] = q[i] * hv[i];
    double diff2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = hqv[i] - qhv[i];
      diff2 += d * d;
    }
    worst = std::max(worst, std::sqrt(diff2));
  }
  return worst;
}

Eigen::MatrixXd reduced_density(const StateVector& state, int first_site,
                                int last_site) {
  check_state(state, "reduced_density");
  if (first_site < 1 || last_site > state.two_n || first_site > last_site) {
    throw std::invalid_argument("reduced_density: invalid site range");
  }
  const int k = last_site - first_site + 1;
  if (k > config::kRegionMaxSites) {
    throw std::domain_error(
        "reduced_density: region exceeds " +
        std::to_string(config::kRegionMaxSites) + " sites");
  }
  const std::int64_t nl = pow3(first_site - 1);
  const std::int64_t nm = pow3(k);
  const std::int64_t nr = pow3(state.two_n - last_site);
  const double* psi = state.amplitudes.data();
  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(
      static_cast<Eigen::Index>(nm), static_cast<Eigen::Index>(nm));
  for (std::int64_t l = 0; l < nl; ++l) {
    for (std::int64_t r1 = 0; r1 < nm; ++r1) {
      const double* a = psi + (l * nm + r1) * nr;
      for (std::int64_t r2 = 0; r2 <= r1; ++r2) {
        const double* b = psi + (l * nm + r2) * nr;
        double acc = 0.0;
        for (std::int64_t t = 0; t < nr; ++t) acc += a[t] * b[t];
        rho(static_cast<Eigen::Index>(r1), static_cast<Eigen::Index>(r2)) +=
            acc;
      }
    }
  }
  for (std::int64_t r1 = 0; r1 < nm; ++r1) {
    for (std::int64_t r2 = r1 + 1; r2 < nm; ++r2) {
      rho(static_cast<Eigen::Index>(r1), static_cast<Eigen::Index>(r2)) =
          rho(static_cast<Eigen::Index>(r2), static_cast<Eigen::Index>(r1));
    }
  }
  return rho;
}

double thermal_correlator(int two_n, int n1, int n2, double beta) {
  config::check_two_n(two_n, config::kDenseMax2n, "thermal_correlator");
  if (n1 < 1 || n1 > two_n || n2 < 1 || n2 > two_n) {
    throw std::invalid_argument("thermal_correlator: site out of range");
  }
  if (!std::isfinite(beta)) {
    throw std::invalid_argument("thermal_correlator: beta must be finite");
  }
  const EigResult& eig = cached_dense_eig(two_n);
  const std::int64_t dim = pow3(two_n);
  std::vector<double> diag_a(static_cast<std::size_t>(dim));
  for (std::int64_t x = 0; x < dim; ++x) {
    diag_a[static_cast<std::size_t>(x)] =
        static_cast<double>((1 - digit_at(x, n1, two_n)) *
                            (1 - digit_at(x, n2, two_n)));
  }
  const double lambda0 = eig.values(0);
  double z = 0.0;
  double num = 0.0;
  for (Eigen::Index kcol = 0; kcol < eig.values.size(); ++kcol) {
    const double w = std::exp(-beta * (eig.values(kcol) - lambda0));
    double overlap = 0.0;
    for (std::int64_t x = 0; x < dim; ++x) {
      const double c = eig.vectors(static_cast<Eigen::Index>(x), kcol);
      overlap += diag_a[static_cast<std::size_t>(x)] * c * c;
    }
    z += w;
    num += w * overlap;
  }
  return num / z;
}

void write_sparse_operator(std::ostream& out, const SparseOperator& op) {
  char buf[64];
  for (const auto& t : op.entries) {
    out << t.row << ' ' << t.col << ' ';
    const auto res = std::to_chars(buf, buf + sizeof(buf), t.value);
    out.write(buf, res.ptr - buf);
    out.put('\n');
  }
}

SparseOperator read_sparse_operator(std::istream& in) {
  SparseOperator op;
  std::int64_t row = 0;
  std::int64_t col = 0;
  double value = 0.0;
  std::int64_t max_index = -1;
  while (in >> row >> col >> value) {
    if (row < 0 || col < 0) {
      throw std::runtime_error("read_sparse_operator: negative index");
    }
    op.entries.push_back(Triple{row, col, value});
    max_index = std::max(max_index, std::max(row, col));
  }
  std::sort(op.entries.begin(), op.entries.end(),
            [](const Triple& a, const Triple& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
  op.dimension = max_index + 1;
  return op;
}

void write_state(std::ostream& out, const StateVector& state) {
  check_state(state, "write_state");
  const std::uint64_t count = state.amplitudes.size();
  out.write(reinterpret_cast<const char*>(&count), 8);
  out.write(reinterpret_cast<const char*>(state.amplitudes.data()),
            static_cast<std::streamsize>(8 * count));
}

StateVector read_state(std::istream& in) {
  std::uint64_t count = 0;
  in.read(reinterpret_cast<char*>(&count), 8);
  if (!in) {
    throw std::runtime_error("read_state: missing length header");
  }
  int two_n = 0;
  std::uint64_t p = 1;
  while (p < count) {
    p *= 3;
    ++two_n;
  }
  if (p != count || two_n < 1) {
    throw std::runtime_error("read_state: length is not a power of three");
  }
  StateVector st;
  st.two_n = two_n;
  st.amplitudes.resize(count);
  in.read(reinterpret_cast<char*>(st.amplitudes.data()),
          static_cast<std::streamsize>(8 * count));
  if (!in) {
    throw std::runtime_error("read_state: truncated amplitude payload");
  }
  return st;
}

}  // namespace motzkin
