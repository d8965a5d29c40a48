#pragma once

#include <optional>
#include <vector>

namespace motzkin {

// How exact expectation values are evaluated: big-integer/rational
// arithmetic with a single final rounding, or log-sum-exp floating
// point.  kAuto picks rational up to config::rational_crossover_two_n().
enum class ArithmeticMode { kAuto, kExactRational, kLogFloat };

// A chain of 2n spin-1 sites; n1 (and optionally n2 > n1) are 1-based
// site indices.
struct ChainGeometry {
  int n = 1;
  int n1 = 1;
  std::optional<int> n2;

  int two_n() const { return 2 * n; }
  // L = n2 - n1, the separation of the two marked sites.
  int block_length() const;
  // b = min(n1, 2n - n1), distance of the first site to the nearer end.
  int boundary_distance() const;
};

// Distribution of the walk height m at site n1; support m = 0..b.
struct HeightDistribution {
  ChainGeometry geometry;
  std::vector<double> probabilities;
};

// Rescaled positions lambda = n1/(2n) (and optionally mu = n2/(2n)) of
// the excursion limit, with the chain half-length n used to restore
// dimensions.
struct ExcursionPoint {
  double lambda = 0.5;
  std::optional<double> mu;
  int n = 1;
};

// p_m = M_{n1,0,m} M_{2n-n1,m,0} / N for m = 0..b.
HeightDistribution height_distribution_exact(
    const ChainGeometry& g, ArithmeticMode mode = ArithmeticMode::kAuto);

// <m_hat_{n1}> = sum m p_m from the exact distribution.
double expected_height_exact(const ChainGeometry& g,
                             ArithmeticMode mode = ArithmeticMode::kAuto);

// Same expectation with the Gaussian-approximated weights
// m^2 exp(-(3m^2/4)(1/n1 + 1/(2n-n1))): sum m^3 w_m / sum m^2 w_m.
double expected_height_gaussian(const ChainGeometry& g);

// (4/sqrt(3 pi)) sqrt(n1 (1 - n1/(2n))).
double expected_height_asymptotic(const ChainGeometry& g);

// <s^z_{n1}> for n1 = 1..2n via the telescoping difference
// <m_hat_{n1}> - <m_hat_{n1-1}>, anchored at <m_hat_0> = 0.  Entry i of
// the result is site i+1.  Sums to 0 (the walk returns to height 0).
std::vector<double> sz_profile_exact(int n,
                                     ArithmeticMode mode = ArithmeticMode::kAuto);

// (2/sqrt(3 pi)) (1 - n1/n) / sqrt(n1 (1 - n1/(2n))); antisymmetric
// about the chain center.
double sz_asymptotic(const ChainGeometry& g);

// <m_hat_{n1} m_hat_{n2}> as the ratio of triple-product walk-count
// sums over the exact support (heights m at n1, m+p at n2, |p| <= L).
// n1 = n2 degenerates to the second moment of the height.
double two_point_height_exact(const ChainGeometry& g,
                              ArithmeticMode mode = ArithmeticMode::kAuto);

// n - L/3 + L^2/(4n) for a block of length L centered on the chain.
double two_point_height_asymptotic(int n, int L);

// <s^z_{n1} s^z_{n2}> by the bivariate finite difference
// (1/4)[f(n1+1,n2+1) - f(n1+1,n2-1) - f(n1-1,n2+1) + f(n1-1,n2-1)]
// of f = two_point_height_exact.  Requires 2 <= n1+1 < n2-1.
double szsz_exact(const ChainGeometry& g,
                  ArithmeticMode mode = ArithmeticMode::kAuto);

// Brownian-excursion height density at rescaled time lambda:
// 2 x^2 exp(-x^2/(2 lambda(1-lambda))) / sqrt(2 pi lambda^3 (1-lambda)^3)
// for x >= 0, else 0.
double excursion_density(double lambda, double x);

struct ExcursionMoments {
  double mean = 0.0;
  double second = 0.0;
};

// mean = 4 sqrt(n) sqrt(2 lambda(1-lambda)/(3 pi)),
// second = 4 n lambda (1-lambda).
ExcursionMoments excursion_moments(const ExcursionPoint& e);

struct ExcursionTwoPoint {
  double joint = 0.0;
  double product = 0.0;
};

// Closed forms for E[m_{2n lambda} m_{2n mu}] and the product of the
// single-point means, sigma^2 = 2/3.
ExcursionTwoPoint excursion_two_point(const ExcursionPoint& e);

// Joint height density f_{lambda,mu}(x1,x2) =
// 2 sqrt(2 pi) p_0(lambda,x1) p(lambda,x1,mu,x2) p_0(1-mu,x2), with the
// absorbed-at-0 transition factor p; zero for negative heights.
double excursion_two_point_density(double lambda, double mu, double x1,
                                   double x2);

}  // namespace motzkin
