#include <motzkin/correlations.hpp>

#include <motzkin/bignum.hpp>
#include <motzkin/config.hpp>
#include <motzkin/walks.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace motzkin {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_n1(const ChainGeometry& g, const char* op) {
  if (g.n < 1) throw std::invalid_argument(std::string(op) + ": n must be positive");
  if (g.n1 < 1 || g.n1 > g.two_n()) {
    throw std::invalid_argument(std::string(op) + ": n1 must lie in [1, 2n]");
  }
}

void check_pair(const ChainGeometry& g, const char* op) {
  check_n1(g, op);
  if (!g.n2.has_value()) {
    throw std::invalid_argument(std::string(op) + ": n2 is required");
  }
  if (*g.n2 < g.n1 || *g.n2 > g.two_n()) {
    throw std::invalid_argument(std::string(op) + ": need n1 <= n2 <= 2n");
  }
}

bool use_rational(int two_n, ArithmeticMode mode) {
  switch (mode) {
    case ArithmeticMode::kExactRational:
      return true;
    case ArithmeticMode::kLogFloat:
      return false;
    case ArithmeticMode::kAuto:
    default:
      return two_n <= config::rational_crossover_two_n();
  }
}

// Log-space walk counts via lgamma; the floating-point route for sizes
// where big-integer sums get costly.

double log_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return kNegInf;
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// log(e^a - e^b) for a > b.
double log_diff(double a, double b) {
  if (b == kNegInf) return a;
  if (b >= a) return kNegInf;
  return a + std::log1p(-std::exp(b - a));
}

class LogSum {
 public:
  void add(double log_term) {
    if (log_term == kNegInf) return;
    if (max_ == kNegInf) {
      max_ = log_term;
      sum_ = 1.0;
    } else if (log_term <= max_) {
      sum_ += std::exp(log_term - max_);
    } else {
      sum_ = sum_ * std::exp(max_ - log_term) + 1.0;
      max_ = log_term;
    }
  }
  double value() const { return max_ == kNegInf ? kNegInf : max_ + std::log(sum_); }

 private:
  double max_ = kNegInf;
  double sum_ = 0.0;
};

double log_dyck(int L, int m1, int m2) {
  const int diff = std::abs(m2 - m1);
  if (diff > L || (L + diff) % 2 != 0) return kNegInf;
  const double la = log_binomial(L, (L + diff) / 2);
  const double lb = log_binomial(L, (L + m1 + m2) / 2 + 1);
  return log_diff(la, lb);
}

double log_motzkin(int L, int m1, int m2) {
  const int diff = std::abs(m2 - m1);
  if (diff > L) return kNegInf;
  LogSum sum;
  for (int flats = (L - diff) % 2; flats <= L - diff; flats += 2) {
    sum.add(log_binomial(L, flats) + log_dyck(L - flats, m1, m2));
  }
  return sum.value();
}

// Exact numerators M_{n1,0,m} M_{2n-n1,m,0} for m = 0..b; they sum to
// the total walk count N.
std::vector<Count> height_numerators(int two_n, int n1) {
  const int b = std::min(n1, two_n - n1);
  std::vector<Count> num(static_cast<std::size_t>(b) + 1);
  for (int m = 0; m <= b; ++m) {
    num[static_cast<std::size_t>(m)] =
        motzkin_count({n1, 0, m}) * motzkin_count({two_n - n1, m, 0});
  }
  return num;
}

std::vector<double> log_height_numerators(int two_n, int n1) {
  const int b = std::min(n1, two_n - n1);
  std::vector<double> num(static_cast<std::size_t>(b) + 1);
  for (int m = 0; m <= b; ++m) {
    num[static_cast<std::size_t>(m)] =
        log_motzkin(n1, 0, m) + log_motzkin(two_n - n1, m, 0);
  }
  return num;
}

Rational expected_height_rational(int two_n, int n1) {
  const auto num = height_numerators(two_n, n1);
  Count weighted = 0;
  for (std::size_t m = 1; m < num.size(); ++m) weighted += Count(m) * num[m];
  return Rational(weighted, motzkin_number(two_n));
}

double expected_height_float(int two_n, int n1) {
  const auto num = log_height_numerators(two_n, n1);
  LogSum weighted;
  for (std::size_t m = 1; m < num.size(); ++m) {
    weighted.add(std::log(static_cast<double>(m)) + num[m]);
  }
  const double lse = weighted.value();
  if (lse == kNegInf) return 0.0;
  return std::exp(lse - log_motzkin(two_n, 0, 0));
}

// <m_hat_a m_hat_b> as an exact ratio; sums run over the full support
// of the triple product (heights m at a, m2 at b).
Rational two_point_rational(int two_n, int a, int b) {
  const int L = b - a;
  const int cap1 = std::min(a, two_n - a);
  const int cap2 = std::min(b, two_n - b);
  std::vector<Count> right(static_cast<std::size_t>(cap2) + 1);
  for (int m2 = 0; m2 <= cap2; ++m2) {
    right[static_cast<std::size_t>(m2)] = motzkin_count({two_n - b, m2, 0});
  }
  Count num = 0;
  Count den = 0;
  for (int m = 0; m <= cap1; ++m) {
    const Count left = motzkin_count({a, 0, m});
    for (int m2 = std::max(0, m - L); m2 <= std::min(m + L, cap2); ++m2) {
      const Count term =
          left * motzkin_count({L, m, m2}) * right[static_cast<std::size_t>(m2)];
      den += term;
      if (m > 0 && m2 > 0) num += Count(m) * Count(m2) * term;
    }
  }
  return Rational(num, den);
}

double two_point_float(int two_n, int a, int b) {
  const int L = b - a;
  const int cap1 = std::min(a, two_n - a);
  const int cap2 = std::min(b, two_n - b);
  std::vector<double> right(static_cast<std::size_t>(cap2) + 1);
  for (int m2 = 0; m2 <= cap2; ++m2) {
    right[static_cast<std::size_t>(m2)] = log_motzkin(two_n - b, m2, 0);
  }
  LogSum num;
  LogSum den;
  for (int m = 0; m <= cap1; ++m) {
    const double left = log_motzkin(a, 0, m);
    for (int m2 = std::max(0, m - L); m2 <= std::min(m + L, cap2); ++m2) {
      const double term =
          left + log_motzkin(L, m, m2) + right[static_cast<std::size_t>(m2)];
      den.add(term);
      if (m > 0 && m2 > 0) {
        num.add(std::log(static_cast<double>(m) * m2) + term);
      }
    }
  }
  if (num.value() == kNegInf) return 0.0;
  return std::exp(num.value() - den.value());
}

void check_lambda(double lambda, const char* op) {
  if (!(lambda > 0.0) || !(lambda < 1.0)) {
    throw std::invalid_argument(std::string(op) + ": lambda must lie in (0,1)");
  }
}

}  // namespace

int ChainGeometry::block_length() const {
  if (!n2.has_value()) {
    throw std::logic_error("ChainGeometry::block_length: n2 not set");
  }
  return *n2 - n1;
}

int ChainGeometry::boundary_distance() const { return std::min(n1, 2 * n - n1); }

HeightDistribution height_distribution_exact(const ChainGeometry& g,
                                             ArithmeticMode mode) {
  config::check_two_n(g.two_n(), config::kHeightMax2n, "height_distribution_exact");
  check_n1(g, "height_distribution_exact");
  const int two_n = g.two_n();
  HeightDistribution dist;
  dist.geometry = g;
  if (use_rational(two_n, mode)) {
    const auto num = height_numerators(two_n, g.n1);
    const Count total = motzkin_number(two_n);
    dist.probabilities.reserve(num.size());
    for (const Count& c : num) {
      dist.probabilities.push_back(ratio_as_double(c, total));
    }
  } else {
    const auto num = log_height_numerators(two_n, g.n1);
    const double log_total = log_motzkin(two_n, 0, 0);
    dist.probabilities.reserve(num.size());
    for (double lc : num) dist.probabilities.push_back(std::exp(lc - log_total));
  }
  return dist;
}

double expected_height_exact(const ChainGeometry& g, ArithmeticMode mode) {
  config::check_two_n(g.two_n(), config::kHeightMax2n, "expected_height_exact");
  check_n1(g, "expected_height_exact");
  if (use_rational(g.two_n(), mode)) {
    return rational_as_double(expected_height_rational(g.two_n(), g.n1));
  }
  return expected_height_float(g.two_n(), g.n1);
}

double expected_height_gaussian(const ChainGeometry& g) {
  check_n1(g, "expected_height_gaussian");
  if (g.n1 >= g.two_n()) {
    throw std::invalid_argument("expected_height_gaussian: n1 must be < 2n");
  }
  const double coeff = 1.0 / g.n1 + 1.0 / (g.two_n() - g.n1);
  const int b = g.boundary_distance();
  KahanSum num;
  KahanSum den;
  for (int m = 1; m <= b; ++m) {
    const double md = m;
    const double w = std::exp(-0.75 * md * md * coeff);
    num.add(md * md * md * w);
    den.add(md * md * w);
  }
  if (den.value() == 0.0) return 0.0;
  return num.value() / den.value();
}

double expected_height_asymptotic(const ChainGeometry& g) {
  check_n1(g, "expected_height_asymptotic");
  const double n1 = g.n1;
  return 4.0 / std::sqrt(3.0 * kPi) * std::sqrt(n1 * (1.0 - n1 / g.two_n()));
}

std::vector<double> sz_profile_exact(int n, ArithmeticMode mode) {
  if (n < 1) throw std::invalid_argument("sz_profile_exact: n must be positive");
  const int two_n = 2 * n;
  config::check_two_n(two_n, config::kHeightMax2n, "sz_profile_exact");
  std::vector<double> profile(static_cast<std::size_t>(two_n));
  if (use_rational(two_n, mode)) {
    Rational prev = 0;
    for (int n1 = 1; n1 <= two_n; ++n1) {
      Rational cur = expected_height_rational(two_n, n1);
      profile[static_cast<std::size_t>(n1 - 1)] = rational_as_double(cur - prev);
      prev = cur;
    }
  } else {
    double prev = 0.0;
    for (int n1 = 1; n1 <= two_n; ++n1) {
      double cur = expected_height_float(two_n, n1);
      profile[static_cast<std::size_t>(n1 - 1)] = cur - prev;
      prev = cur;
    }
  }
  return profile;
}

double sz_asymptotic(const ChainGeometry& g) {
  check_n1(g, "sz_asymptotic");
  const double n1 = g.n1;
  const double ratio = 1.0 - n1 / g.n;
  return 2.0 / std::sqrt(3.0 * kPi) * ratio /
         std::sqrt(n1 * (1.0 - n1 / g.two_n()));
}

double two_point_height_exact(const ChainGeometry& g, ArithmeticMode mode) {
  config::check_two_n(g.two_n(), config::kTwoPointMax2n, "two_point_height_exact");
  check_pair(g, "two_point_height_exact");
  if (use_rational(g.two_n(), mode)) {
    return rational_as_double(two_point_rational(g.two_n(), g.n1, *g.n2));
  }
  return two_point_float(g.two_n(), g.n1, *g.n2);
}

double two_point_height_asymptotic(int n, int L) {
  if (n < 1) throw std::invalid_argument("two_point_height_asymptotic: n must be positive");
  if (L < 0) throw std::invalid_argument("two_point_height_asymptotic: negative L");
  const double nd = n;
  const double Ld = L;
  return nd - Ld / 3.0 + Ld * Ld / (4.0 * nd);
}

double szsz_exact(const ChainGeometry& g, ArithmeticMode mode) {
  config::check_two_n(g.two_n(), config::kTwoPointMax2n, "szsz_exact");
  check_pair(g, "szsz_exact");
  const int n1 = g.n1;
  const int n2 = *g.n2;
  if (n1 < 2 || n2 > g.two_n() - 1) {
    throw std::invalid_argument("szsz_exact: boundary sites rejected");
  }
  if (n1 + 1 >= n2 - 1) {
    throw std::invalid_argument("szsz_exact: need n1 + 1 < n2 - 1");
  }
  const int two_n = g.two_n();
  if (use_rational(two_n, mode)) {
    const Rational q = (two_point_rational(two_n, n1 + 1, n2 + 1) -
                        two_point_rational(two_n, n1 + 1, n2 - 1) -
                        two_point_rational(two_n, n1 - 1, n2 + 1) +
                        two_point_rational(two_n, n1 - 1, n2 - 1)) /
                       4;
    return rational_as_double(q);
  }
  return 0.25 * (two_point_float(two_n, n1 + 1, n2 + 1) -
                 two_point_float(two_n, n1 + 1, n2 - 1) -
                 two_point_float(two_n, n1 - 1, n2 + 1) +
                 two_point_float(two_n, n1 - 1, n2 - 1));
}

double excursion_density(double lambda, double x) {
  check_lambda(lambda, "excursion_density");
  if (x < 0.0) return 0.0;
  const double v = lambda * (1.0 - lambda);
  return 2.0 * x * x * std::exp(-x * x / (2.0 * v)) /
         std::sqrt(2.0 * kPi * v * v * v);
}

ExcursionMoments excursion_moments(const ExcursionPoint& e) {
  check_lambda(e.lambda, "excursion_moments");
  if (e.mu.has_value()) {
    throw std::invalid_argument("excursion_moments: mu must be absent");
  }
  if (e.n < 1) throw std::invalid_argument("excursion_moments: n must be positive");
  const double v = e.lambda * (1.0 - e.lambda);
  ExcursionMoments m;
  m.mean = 4.0 * std::sqrt(static_cast<double>(e.n)) * std::sqrt(2.0 * v / (3.0 * kPi));
  m.second = 4.0 * e.n * v;
  return m;
}

ExcursionTwoPoint excursion_two_point(const ExcursionPoint& e) {
  check_lambda(e.lambda, "excursion_two_point");
  if (!e.mu.has_value()) {
    throw std::invalid_argument("excursion_two_point: mu is required");
  }
  const double mu = *e.mu;
  if (!(mu > e.lambda) || !(mu < 1.0)) {
    throw std::invalid_argument("excursion_two_point: need lambda < mu < 1");
  }
  if (e.n < 1) throw std::invalid_argument("excursion_two_point: n must be positive");
  const double lambda = e.lambda;
  const double sigma_sq = 2.0 / 3.0;
  const double n = e.n;
  ExcursionTwoPoint r;
  r.joint = 4.0 * n * sigma_sq / kPi *
            (3.0 * std::sqrt(lambda * (1.0 - mu) * (mu - lambda)) +
             (lambda * (2.0 - 3.0 * mu) + mu) *
                 std::atan(std::sqrt(lambda * (1.0 - mu) / (mu - lambda))));
  r.product = 16.0 * n * sigma_sq / kPi *
              std::sqrt(lambda * mu * (1.0 - mu) * (1.0 - lambda));
  return r;
}

double excursion_two_point_density(double lambda, double mu, double x1,
                                   double x2) {
  check_lambda(lambda, "excursion_two_point_density");
  if (!(mu > lambda) || !(mu < 1.0)) {
    throw std::invalid_argument(
        "excursion_two_point_density: need lambda < mu < 1");
  }
  if (x1 < 0.0 || x2 < 0.0) return 0.0;
  const double sqrt_two_pi = std::sqrt(2.0 * kPi);
  const double p0_left =
      x1 * std::exp(-x1 * x1 / (2.0 * lambda)) / (sqrt_two_pi * std::pow(lambda, 1.5));
  const double rest = 1.0 - mu;
  const double p0_right =
      x2 * std::exp(-x2 * x2 / (2.0 * rest)) / (sqrt_two_pi * std::pow(rest, 1.5));
  const double step = mu - lambda;
  const double transition = (std::exp(-(x1 - x2) * (x1 - x2) / (2.0 * step)) -
                             std::exp(-(x1 + x2) * (x1 + x2) / (2.0 * step))) /
                            std::sqrt(2.0 * kPi * step);
  return 2.0 * sqrt_two_pi * p0_left * transition * p0_right;
}

}  // namespace motzkin
