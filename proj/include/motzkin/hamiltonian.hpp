#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace motzkin {

// Dense amplitude vector over base-3 spin configurations.  Site 1 is
// the most significant digit; digit values u=0, 0=1, d=2, so the spin
// value at a site is 1 - digit.
struct StateVector {
  int two_n = 1;
  std::vector<double> amplitudes;
};

struct Triple {
  std::int64_t row = 0;
  std::int64_t col = 0;
  double value = 0.0;
};

// Real symmetric operator on the 3^{2n}-dimensional chain space,
// entries sorted by (row, col) with one triple per nonzero.
struct SparseOperator {
  std::int64_t dimension = 0;
  std::vector<Triple> entries;
};

// Uniform superposition of the height-walk configurations (amplitude
// 1/sqrt(N) on each, 0 elsewhere).
StateVector build_motzkin_state(int two_n);

// H = sum_j Pi_{j,j+1} + Pi_boundary from the ket-level rank-1
// projectors |D><D|, |U><U|, |phi><phi| per bond.
SparseOperator build_hamiltonian(int two_n);

// The same operator assembled from spin-matrix expressions (products
// of s^z, S^+/-, identities); must agree entrywise with
// build_hamiltonian.
SparseOperator build_hamiltonian_spin(int two_n);

std::vector<double> apply(const SparseOperator& op,
                          const std::vector<double>& x);

struct FrustrationReport {
  bool frustration_free = false;
  bool unique_ground_state = false;
  // |Pi_{j,j+1}|M>| for j = 1..2n-1, then the boundary projector
  // residual.
  std::vector<double> bond_residuals;
  double boundary_residual = 0.0;
  // Second-smallest eigenvalue of H; > 0 iff the ground space is 1D.
  double gap = 0.0;
};

FrustrationReport verify_frustration_free(int two_n);

// Second-smallest eigenvalue of H (the ground energy is exactly 0).
double spectral_gap(int two_n);

struct GapResult {
  double gap = 0.0;
  bool converged = false;
  int iterations = 0;
  // A posteriori bound on the eigenvalue error of the reported gap.
  double error_bound = 0.0;
};

GapResult spectral_gap_result(int two_n);

struct GapFit {
  std::vector<int> sizes;  // chain lengths 2n
  std::vector<double> gaps;
  double exponent = 0.0;   // c in gap ~ n^{-c}
  double residual = 0.0;   // rms residual of the log-log fit
};

// Least-squares fit of ln(gap) against ln(n = size/2); the first
// overload computes the gaps itself.
GapFit fit_gap_exponent(const std::vector<int>& sizes);
GapFit fit_gap_exponent(const std::vector<int>& sizes,
                        const std::vector<double>& gaps);

// <state| s^axis_site |state>, axis one of 'x', 'y', 'z'; site 1-based.
double spin_expectation(const StateVector& state, int site, char axis);

// Max over 20 random unit vectors v of |(H Q - Q H) v| with
// Q = sum_j s^z_j; the conserved charge makes this < 1e-12.
double conserved_charge_check(int two_n);

// Partial trace of |state><state| onto the contiguous sites
// [first_site, last_site]; trace-1 PSD matrix of size 3^{sites}.
Eigen::MatrixXd reduced_density(const StateVector& state, int first_site,
                                int last_site);

// (1/Z) Tr[s^z_{n1} s^z_{n2} exp(-beta H)] by full dense
// eigendecomposition (cached per size).
double thermal_correlator(int two_n, int n1, int n2, double beta);

// Coordinate triplet text: "row col value" per line, 0-indexed, with
// round-trip-exact decimal values.
void write_sparse_operator(std::ostream& out, const SparseOperator& op);
SparseOperator read_sparse_operator(std::istream& in);

// Binary little-endian doubles preceded by an 8-byte length header.
void write_state(std::ostream& out, const StateVector& state);
StateVector read_state(std::istream& in);

}  // namespace motzkin
