#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <motzkin/asymptotics.hpp>
#include <motzkin/bignum.hpp>
#include <motzkin/walks.hpp>

#include "oracles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace {

// Relative error on the underlying value given two log-space numbers.
double value_rel_error(double log_approx, double log_exact) {
  return std::fabs(std::expm1(log_approx - log_exact));
}

double exact_central_trinomial_log(int L) {
  const int t = L / 3;
  return oracle::log_int(oracle::trinomial_coeff(L, t, t, t));
}

double exact_m_count_log(int L, int m) {
  return oracle::log_int(oracle::Int(motzkin::motzkin_count({L, 0, m})));
}

double exact_block_count_log(int L, int p) {
  return oracle::log_int(oracle::free_count(L, p));
}

}  // namespace

TEST_CASE("central trinomial approximation") {
  constexpr double kPi = 3.141592653589793238462643383279502884;
  // The deviation-free point is a closed-form expression.
  const double expected = 301.5 * std::log(3.0) - std::log(600.0 * kPi);
  CHECK(motzkin::trinomial_gaussian({300, 0.0, 0.0, 0.0}) ==
        doctest::Approx(expected).epsilon(1e-13));
  // Against exact factorial ratios: 2% on the value from L = 60 up.
  for (int L : {60, 90, 300}) {
    const double approx = motzkin::trinomial_gaussian({L, 0.0, 0.0, 0.0});
    CHECK(value_rel_error(approx, exact_central_trinomial_log(L)) < 0.02);
  }
  // Off-center point, 1% relative on the log.
  const double off = motzkin::trinomial_gaussian({300, 10.0, -5.0, -5.0});
  const double off_exact =
      oracle::log_int(oracle::trinomial_coeff(300, 110, 95, 95));
  CHECK(std::fabs((off - off_exact) / off_exact) < 0.01);
  // Larger deviations mean smaller values.
  CHECK(motzkin::trinomial_gaussian({300, 6.0, -3.0, -3.0}) >
        motzkin::trinomial_gaussian({300, 12.0, -6.0, -6.0}));
  CHECK_THROWS_AS(motzkin::trinomial_gaussian({0, 0.0, 0.0, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(motzkin::trinomial_gaussian({300, 0.1, 0.0, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("walk-count approximation at fixed rescaled height") {
  // alpha = 1 point at L = 200: within 5% of the exact count.
  CHECK(value_rel_error(motzkin::m_count_asymptotic(200, 14),
                        exact_m_count_log(200, 14)) < 0.05);
  // m = 0 is the documented sentinel, not an error.
  CHECK(motzkin::m_count_asymptotic(200, 0) ==
        -std::numeric_limits<double>::infinity());
  // Error decays as L doubles at alpha = 1 (m = round(sqrt(L))).
  const double e100 = value_rel_error(motzkin::m_count_asymptotic(100, 10),
                                      exact_m_count_log(100, 10));
  const double e200 = value_rel_error(motzkin::m_count_asymptotic(200, 14),
                                      exact_m_count_log(200, 14));
  const double e400 = value_rel_error(motzkin::m_count_asymptotic(400, 20),
                                      exact_m_count_log(400, 20));
  CHECK(e400 < e200);
  CHECK(e200 <= 1.2 * e100);
  CHECK(e400 <= 1.2 * e200);
  CHECK_THROWS_AS(motzkin::m_count_asymptotic(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(motzkin::m_count_asymptotic(10, -1), std::invalid_argument);
}

TEST_CASE("displacement-resolved free-walk approximation") {
  CHECK(value_rel_error(motzkin::block_count_asymptotic(100, 0),
                        exact_block_count_log(100, 0)) < 0.03);
  // Even in the displacement.
  CHECK(motzkin::block_count_asymptotic(100, 6) ==
        motzkin::block_count_asymptotic(100, -6));
  // Tail point stays within 15%.
  CHECK(value_rel_error(motzkin::block_count_asymptotic(100, 30),
                        exact_block_count_log(100, 30)) < 0.15);
  CHECK_THROWS_AS(motzkin::block_count_asymptotic(0, 0), std::invalid_argument);
}

TEST_CASE("saddle location of the flat-count summand") {
  CHECK(motzkin::saddle_index(300, 0) == 100.0);
  // Explicit polynomial value.
  const double by_hand = 100.0 - 17.0 / 2.0 + 289.0 / 2400.0 +
                         3.0 * 83521.0 / (128.0 * 27000000.0);
  CHECK(motzkin::saddle_index(300, 17) == doctest::Approx(by_hand).epsilon(1e-15));
  // Within +-2 of the exact big-integer argmax of the summand.
  for (const auto& [L, m] : {std::pair{300, 17}, std::pair{90, 9}}) {
    oracle::Int best = -1;
    int argmax = -1;
    for (int i = 0; 2 * i + m <= L; ++i) {
      oracle::Int term =
          oracle::factorial(L + 1) /
          (oracle::factorial(L - 2 * i - m) * oracle::factorial(i) *
           oracle::factorial(i + m + 1));
      if (term > best) {
        best = term;
        argmax = i;
      }
    }
    CHECK(std::fabs(motzkin::saddle_index(L, m) - argmax) <= 2.0);
  }
  CHECK_THROWS_AS(motzkin::saddle_index(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(motzkin::saddle_index(10, -1), std::invalid_argument);
}

TEST_CASE("lattice moment sums against the continuum closed form") {
  const motzkin::MomentSum even = motzkin::gaussian_moment_sum(100, 2, 0.75);
  CHECK(std::fabs(even.sum - even.integral) < 1e-6 * even.integral);
  CHECK(even.integral ==
        doctest::Approx(0.5 * std::tgamma(1.5) * std::pow(100.0 / 0.75, 1.5))
            .epsilon(1e-14));

  // For odd powers the lattice sum carries a size-independent
  // Euler-Maclaurin constant: sum - integral -> g!/((g+1)! ...) terms
  // whose leading piece at g = 3 is B_4/4! * f'''(0) = 1/120.  At
  // L = 100 that is a 3.8e-6 relative gap; 1e-5 bounds it with margin.
  const motzkin::MomentSum odd = motzkin::gaussian_moment_sum(100, 3, 1.5);
  CHECK(std::fabs(odd.sum - odd.integral) < 1e-5 * odd.integral);
  CHECK(std::fabs((odd.sum - odd.integral) - 1.0 / 120.0) < 1e-4);

  // Tiny-L case: both finite, no closeness contract.
  const motzkin::MomentSum tiny = motzkin::gaussian_moment_sum(1, 1, 10.0);
  CHECK(tiny.sum == doctest::Approx(std::exp(-10.0)).epsilon(1e-14));
  CHECK(tiny.integral == doctest::Approx(0.05).epsilon(1e-14));

  CHECK_THROWS_AS(motzkin::gaussian_moment_sum(0, 2, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(motzkin::gaussian_moment_sum(10, 0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(motzkin::gaussian_moment_sum(10, 2, 0.0),
                  std::invalid_argument);
}

TEST_CASE("log-space evaluation never overflows at large sizes") {
  const double a = motzkin::trinomial_gaussian({1000000, 0.0, 0.0, 0.0});
  const double b = motzkin::m_count_asymptotic(1000000, 1000);
  const double c = motzkin::block_count_asymptotic(1000000, 500);
  for (double v : {a, b, c}) {
    CHECK(std::isfinite(v));
    CHECK(v > 1e6);  // dominated by L ln 3
  }
}
