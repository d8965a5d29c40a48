#pragma once

#include <motzkin/correlations.hpp>

#include <utility>
#include <vector>

namespace motzkin {

// Schmidt-style spectrum: integer labels (height m or imbalance p) with
// nonnegative weights summing to 1.
struct Spectrum {
  std::vector<int> labels;
  std::vector<double> weights;
};

struct EntropyReport {
  double exact_nats = 0.0;
  double asymptotic_nats = 0.0;
  double exact_bits = 0.0;
  double asymptotic_bits = 0.0;
  int rank = 1;
};

// Schmidt spectrum across the cut at n1: weights p_m for m = 0..b, so
// rank b+1.  Same weights as height_distribution_exact.
Spectrum cut_spectrum(const ChainGeometry& g,
                      ArithmeticMode mode = ArithmeticMode::kAuto);

// Gaussian-approximated cut weights m^2 exp(-(3m^2/4)(1/n1+1/(2n-n1))),
// normalized over m = 0..b (the m = 0 weight vanishes).
Spectrum cut_spectrum_gaussian(const ChainGeometry& g);

// exact: -sum p_m ln p_m; asymptotic: (1/2) ln[n1(2n-n1)/n] + gamma
// - 1/2 + (1/2) ln(2 pi/3) nats.
EntropyReport cut_entropy(const ChainGeometry& g,
                          ArithmeticMode mode = ArithmeticMode::kAuto);

// Renyi entropy ln(sum p_m^kappa)/(1-kappa); kappa = 1 dispatches to
// cut_entropy.  asymptotic: (1/2) ln[n1(2n-n1)/n] + renyi_cut_f(kappa).
EntropyReport cut_renyi(const ChainGeometry& g, double kappa,
                        ArithmeticMode mode = ArithmeticMode::kAuto);

// f(kappa) = ln Gamma(kappa+1/2)/(1-kappa)
//            - [(1+2 kappa) ln kappa + kappa ln(pi/24) + ln 6]/(2(1-kappa));
// at kappa = 1 the removable singularity is filled with its limit
// gamma - 1/2 + (1/2) ln(2 pi/3).
double renyi_cut_f(double kappa);

// lambda_p = exp(-(3/4)p^2/L) / Z for p = -L..L; rank 2L+1.
Spectrum block_spectrum(int L);

// exact: -sum lambda_p ln lambda_p; asymptotic: (1/2) ln L
// + ln(2 sqrt(pi/3)) + 1/2 nats.
EntropyReport block_entropy(int L);

// Asymptotic block entropy keeping the boundary-distance corrections:
// (1/2) ln L + ln(2 sqrt(pi/3)) + 1/2 - (3/4)(L/b) - (9/16)(L/b)^2.
double block_entropy_corrected(int L, int b);

// ln(sum lambda_p^kappa)/(1-kappa); asymptotic (1/2) ln L
// + renyi_block_g(kappa).
EntropyReport block_renyi(int L, double kappa);

// g(kappa) = ln(2 sqrt(pi/3)) - ln(kappa)/(2(1-kappa)); continuous at
// kappa = 1 with value ln(2 sqrt(pi/3)) + 1/2.
double renyi_block_g(double kappa);

// (m, E_m) with E_m = (3m^2/4)(1/n1 + 1/(2n-n1)) - 2 ln m for
// m = 1..b; exp(-E_m) renormalized reproduces the Gaussian cut weights.
std::vector<std::pair<int, double>> entanglement_hamiltonian_cut(
    const ChainGeometry& g);

// (p, E_p) with E_p = (3/4)p^2/L for p = -L..L; Boltzmann weights of
// E_p reproduce block_spectrum.
std::vector<std::pair<int, double>> entanglement_hamiltonian_block(int L);

}  // namespace motzkin
