#include <motzkin/asymptotics.hpp>

#include <motzkin/bignum.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace motzkin {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const double kLog3 = std::log(3.0);
}  // namespace

double trinomial_gaussian(const TrinomialPoint& p) {
  if (p.total < 1) {
    throw std::invalid_argument("trinomial_gaussian: L must be positive");
  }
  if (std::abs(p.x + p.y + p.z) > 1e-12) {
    throw std::invalid_argument(
        "trinomial_gaussian: deviations must sum to zero");
  }
  const double L = p.total;
  return (L + 1.5) * kLog3 - std::log(2.0 * kPi * L) -
         1.5 * (p.x * p.x + p.y * p.y + p.z * p.z) / L;
}

double m_count_asymptotic(int L, int m) {
  if (L < 1) throw std::invalid_argument("m_count_asymptotic: L must be positive");
  if (m < 0) throw std::invalid_argument("m_count_asymptotic: negative m");
  if (m == 0) return -std::numeric_limits<double>::infinity();
  const double Ld = L;
  const double alpha = m / std::sqrt(Ld);
  // 3^{L+3/2} alpha e^{-3 alpha^2/4} / (2 sqrt(pi) L); equivalently
  // 3^{L+3/2} m e^{-3 m^2/(4L)} / (2 sqrt(pi) L^{3/2}).
  return (Ld + 1.5) * kLog3 - std::log(2.0) - 0.5 * std::log(kPi) -
         std::log(Ld) + std::log(alpha) - 0.75 * alpha * alpha;
}

double block_count_asymptotic(int L, int p) {
  if (L < 1) throw std::invalid_argument("block_count_asymptotic: L must be positive");
  const double Ld = L;
  return (Ld + 0.5) * kLog3 - std::log(2.0) - 0.5 * std::log(kPi * Ld) -
         0.75 * static_cast<double>(p) * p / Ld;
}

double saddle_index(int L, int m) {
  if (L < 1) throw std::invalid_argument("saddle_index: L must be positive");
  if (m < 0) throw std::invalid_argument("saddle_index: negative m");
  const double Ld = L;
  const double md = m;
  return Ld / 3.0 - md / 2.0 + md * md / (8.0 * Ld) +
         3.0 * md * md * md * md / (128.0 * Ld * Ld * Ld);
}

MomentSum gaussian_moment_sum(int L, int g, double a) {
  if (L < 1) throw std::invalid_argument("gaussian_moment_sum: L must be positive");
  if (g < 1) throw std::invalid_argument("gaussian_moment_sum: g must be >= 1");
  if (!(a > 0.0)) throw std::invalid_argument("gaussian_moment_sum: a must be positive");
  const double Ld = L;
  KahanSum sum;
  for (int m = 1; m <= L; ++m) {
    const double md = m;
    sum.add(std::pow(md, g) * std::exp(-a * md * md / Ld));
  }
  const double integral =
      0.5 * std::tgamma((g + 1) / 2.0) * std::pow(Ld / a, (g + 1) / 2.0);
  return {sum.value(), integral};
}

}  // namespace motzkin
