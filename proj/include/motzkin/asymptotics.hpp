#pragma once

#include <utility>

namespace motzkin {

// Deviations of a trinomial coefficient's three indices from L/3 each;
// constrained to x + y + z = 0.
struct TrinomialPoint {
  int total = 1;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// All asymptotic counts are returned in log-space so L up to 1e6 cannot
// overflow.

// log of 3^{L+1} sqrt(3)/(2 pi L) * exp(-(3/2)(x^2+y^2+z^2)/L), the
// Gaussian approximation to the central trinomial coefficient
// L!/(i! j! k!) at i = L/3 + x etc.  Rejects L < 1 and |x+y+z| > 1e-12.
double trinomial_gaussian(const TrinomialPoint& p);

// log of 3^{L+3/2}/(2 sqrt(pi) L^{3/2}) * m exp(-3 alpha^2/4) with
// alpha = m/sqrt(L), approximating the count of walks 0 -> m.  Returns
// -infinity at m = 0 (the density's m prefactor vanishes there even
// though the exact count does not).
double m_count_asymptotic(int L, int m);

// log of 3^{L+1/2}/(2 sqrt(pi L)) * exp(-(3/4)p^2/L), approximating the
// p-resolved count of height-unconstrained bulk walks.
double block_count_asymptotic(int L, int p);

// Saddle location L/3 - m/2 + m^2/(8L) + 3 m^4/(128 L^3) of the
// flat-step-count summand in the 0 -> m walk count.
double saddle_index(int L, int m);

struct MomentSum {
  double sum = 0.0;
  double integral = 0.0;
};

// Direct sum S = sum_{m=0}^{L} m^g exp(-a m^2/L) next to the closed
// form of its continuum version, (1/2) Gamma((g+1)/2) (L/a)^{(g+1)/2}.
// The two differ by O(L^g e^{-aL}) plus discretization error.
MomentSum gaussian_moment_sum(int L, int g, double a);

}  // namespace motzkin
