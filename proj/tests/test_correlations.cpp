#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <motzkin/bignum.hpp>
#include <motzkin/config.hpp>
#include <motzkin/correlations.hpp>
#include <motzkin/hamiltonian.hpp>
#include <motzkin/quadrature.hpp>
#include <motzkin/walks.hpp>

#include "oracles.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

using motzkin::ArithmeticMode;
using motzkin::ChainGeometry;
using motzkin::ExcursionPoint;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double exact_ratio(long long num, long long den) {
  return motzkin::ratio_as_double(motzkin::Count(num), motzkin::Count(den));
}

// Height of walk `steps` after `site` steps (1-based).
int height_at(const std::vector<int>& steps, int site) {
  int h = 0;
  for (int i = 0; i < site; ++i) h += steps[static_cast<std::size_t>(i)];
  return h;
}

// Direct enumeration average of m_{n1} (and m_{n1} m_{n2} when n2 > 0)
// over every walk, as an exact rational.
oracle::Rat enumerated_height_moment(int two_n, int n1, int n2) {
  oracle::Int total = 0;
  oracle::Int walks = 0;
  oracle::for_each_motzkin_walk(two_n, [&](const std::vector<int>& steps) {
    ++walks;
    const int h1 = height_at(steps, n1);
    total += n2 > 0 ? oracle::Int(h1) * height_at(steps, n2) : oracle::Int(h1);
  });
  return oracle::Rat(total, walks);
}

double rat_to_double(const oracle::Rat& r) {
  return motzkin::rational_as_double(motzkin::Rational(
      motzkin::Count(boost::multiprecision::numerator(r).str()),
      motzkin::Count(boost::multiprecision::denominator(r).str())));
}

// <M| s^z_{n1} s^z_{n2} |M> read directly off the state amplitudes.
double state_szsz(int two_n, int n1, int n2) {
  const motzkin::StateVector state = motzkin::build_motzkin_state(two_n);
  double total = 0.0;
  for (std::int64_t i = 0;
       i < static_cast<std::int64_t>(state.amplitudes.size()); ++i) {
    const double a = state.amplitudes[static_cast<std::size_t>(i)];
    if (a == 0.0) continue;
    const int s1 = 1 - oracle::digit_of(i, n1, two_n);
    const int s2 = 1 - oracle::digit_of(i, n2, two_n);
    total += a * a * s1 * s2;
  }
  return total;
}

}  // namespace

TEST_CASE("chain geometry derived quantities") {
  ChainGeometry g{6, 4, 9};
  CHECK(g.two_n() == 12);
  CHECK(g.block_length() == 5);
  CHECK(g.boundary_distance() == 4);
  CHECK(ChainGeometry{6, 9, {}}.boundary_distance() == 3);
  CHECK_THROWS_AS(ChainGeometry{6, 4, {}}.block_length(), std::logic_error);
}

TEST_CASE("height distribution pinned values") {
  const auto tiny = motzkin::height_distribution_exact({1, 1, {}});
  REQUIRE(tiny.probabilities.size() == 2);
  CHECK(tiny.probabilities[0] == 0.5);
  CHECK(tiny.probabilities[1] == 0.5);

  const auto mid = motzkin::height_distribution_exact({2, 2, {}});
  REQUIRE(mid.probabilities.size() == 3);
  CHECK(mid.probabilities[0] == exact_ratio(4, 9));
  CHECK(mid.probabilities[1] == exact_ratio(4, 9));
  CHECK(mid.probabilities[2] == exact_ratio(1, 9));

  const auto eight = motzkin::height_distribution_exact({4, 4, {}});
  REQUIRE(eight.probabilities.size() == 5);
  const long long nums[] = {81, 144, 81, 16, 1};
  for (int m = 0; m <= 4; ++m) {
    CHECK(eight.probabilities[static_cast<std::size_t>(m)] ==
          exact_ratio(nums[m], 323));
  }
}

TEST_CASE("height distribution equals the independent rational oracle") {
  for (int two_n = 2; two_n <= 12; two_n += 2) {
    const oracle::Int norm = oracle::path_count(two_n, 0, 0, true);
    for (int n1 = 1; n1 <= two_n - 1; ++n1) {
      const auto dist =
          motzkin::height_distribution_exact({two_n / 2, n1, {}});
      const int b = std::min(n1, two_n - n1);
      REQUIRE(static_cast<int>(dist.probabilities.size()) == b + 1);
      for (int m = 0; m <= b; ++m) {
        const oracle::Rat expected(oracle::path_count(n1, 0, m, true) *
                                       oracle::path_count(two_n - n1, m, 0, true),
                                   norm);
        CHECK(dist.probabilities[static_cast<std::size_t>(m)] ==
              rat_to_double(expected));
      }
    }
  }
}

TEST_CASE("height distribution normalization across sizes") {
  for (int two_n : {2, 4, 8, 14, 30, 60, 120}) {
    for (int n1 = 1; n1 <= two_n - 1; ++n1) {
      const auto dist =
          motzkin::height_distribution_exact({two_n / 2, n1, {}});
      double sum = 0.0;
      for (double p : dist.probabilities) {
        CHECK(p >= 0.0);
        sum += p;
      }
      CHECK(std::fabs(sum - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("height distribution guards and arithmetic modes") {
  CHECK_THROWS_AS(motzkin::height_distribution_exact({201, 100, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(motzkin::height_distribution_exact({4, 0, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(motzkin::height_distribution_exact({4, 8, {}}),
                  std::invalid_argument);
  const auto rational = motzkin::height_distribution_exact(
      {30, 25, {}}, ArithmeticMode::kExactRational);
  const auto logf = motzkin::height_distribution_exact(
      {30, 25, {}}, ArithmeticMode::kLogFloat);
  REQUIRE(rational.probabilities.size() == logf.probabilities.size());
  for (std::size_t i = 0; i < rational.probabilities.size(); ++i) {
    CHECK(logf.probabilities[i] ==
          doctest::Approx(rational.probabilities[i]).epsilon(1e-13));
  }
}

TEST_CASE("expected height pinned values and enumeration oracle") {
  CHECK(motzkin::expected_height_exact({1, 1, {}}) == 0.5);
  CHECK(motzkin::expected_height_exact({2, 4, {}}) == 0.0);
  for (int two_n = 2; two_n <= 12; two_n += 2) {
    for (int n1 = 1; n1 <= two_n; ++n1) {
      CHECK(motzkin::expected_height_exact({two_n / 2, n1, {}}) ==
            rat_to_double(enumerated_height_moment(two_n, n1, 0)));
    }
  }
}

TEST_CASE("expected height near-boundary asymptotic agreement") {
  const ChainGeometry mid{85, 85, {}};
  const double closed = 4.0 / std::sqrt(3.0 * kPi) * std::sqrt(42.5);
  CHECK(motzkin::expected_height_asymptotic(mid) ==
        doctest::Approx(closed).epsilon(1e-14));
  CHECK(motzkin::expected_height_asymptotic({85, 170, {}}) == 0.0);
  const double exact = motzkin::expected_height_exact(mid);
  CHECK(std::fabs(motzkin::expected_height_asymptotic(mid) - exact) <
        0.02 * exact);
  // Gaussian-weight variant stays close to the fully exact sum.
  CHECK(std::fabs(motzkin::expected_height_gaussian(mid) - exact) <
        0.02 * exact);
}

TEST_CASE("spin profile telescopes to zero and is antisymmetric") {
  for (int n : {2, 4, 5, 10}) {
    const auto profile = motzkin::sz_profile_exact(n);
    REQUIRE(static_cast<int>(profile.size()) == 2 * n);
    CHECK(profile.front() > 0.0);
    CHECK(profile.back() < 0.0);
    double sum = 0.0;
    for (double v : profile) sum += v;
    CHECK(std::fabs(sum) < 1e-12);
    for (int n1 = 1; n1 <= 2 * n; ++n1) {
      CHECK(profile[static_cast<std::size_t>(n1 - 1)] ==
            doctest::Approx(-profile[static_cast<std::size_t>(2 * n - n1)])
                .epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(motzkin::sz_profile_exact(201), std::invalid_argument);
}

TEST_CASE("spin profile asymptotic formula") {
  CHECK(motzkin::sz_asymptotic({85, 85, {}}) == 0.0);
  for (int n1 : {13, 40, 77}) {
    CHECK(motzkin::sz_asymptotic({85, n1, {}}) ==
          doctest::Approx(-motzkin::sz_asymptotic({85, 170 - n1, {}}))
              .epsilon(1e-13));
  }
  // Bulk agreement with the exact profile at the reference size.
  const auto profile = motzkin::sz_profile_exact(85);
  const double approx = motzkin::sz_asymptotic({85, 40, {}});
  CHECK(approx > 0.0);
  CHECK(std::fabs(approx - profile[39]) < 0.01);
}

TEST_CASE("two-point height function pinned value and enumeration oracle") {
  CHECK(motzkin::two_point_height_exact({2, 1, 3}) == exact_ratio(3, 9));
  for (int two_n : {4, 6, 8, 10}) {
    for (int n1 = 1; n1 < two_n; ++n1) {
      for (int n2 = n1; n2 <= two_n; ++n2) {
        CHECK(motzkin::two_point_height_exact({two_n / 2, n1, n2}) ==
              rat_to_double(enumerated_height_moment(two_n, n1, n2)));
      }
    }
  }
}

TEST_CASE("two-point degenerate case reduces to the second moment") {
  const auto dist = motzkin::height_distribution_exact({4, 3, {}});
  double second = 0.0;
  for (int m = 0; m < static_cast<int>(dist.probabilities.size()); ++m) {
    second += m * m * dist.probabilities[static_cast<std::size_t>(m)];
  }
  CHECK(motzkin::two_point_height_exact({4, 3, 3}) ==
        doctest::Approx(second).epsilon(1e-14));
}

TEST_CASE("two-point guards") {
  CHECK_THROWS_AS(motzkin::two_point_height_exact({151, 10, 20}),
                  std::invalid_argument);
  CHECK_THROWS_AS(motzkin::two_point_height_exact({4, 5, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(motzkin::two_point_height_exact({4, 3, {}}),
                  std::invalid_argument);
}

TEST_CASE("centered-block asymptotic two-point formula") {
  CHECK(motzkin::two_point_height_asymptotic(85, 0) == 85.0);
  CHECK(motzkin::two_point_height_asymptotic(85, 10) ==
        doctest::Approx(85.0 - 10.0 / 3.0 + 100.0 / 340.0).epsilon(1e-15));
  // Connected component at zero separation: n (1 - 8/(3 pi)).
  const double n = 85.0;
  const double mean = motzkin::expected_height_asymptotic({85, 85, {}});
  CHECK(motzkin::two_point_height_asymptotic(85, 0) - mean * mean ==
        doctest::Approx(n * (1.0 - 8.0 / (3.0 * kPi))).epsilon(1e-12));
  CHECK_THROWS_AS(motzkin::two_point_height_asymptotic(0, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(motzkin::two_point_height_asymptotic(10, -1),
                  std::invalid_argument);
}

TEST_CASE("spin-spin correlator pinned rationals at mirror pairs") {
  CHECK(motzkin::szsz_exact({4, 3, 6}) == exact_ratio(-28, 323));
  CHECK(motzkin::szsz_exact({3, 2, 5}) == exact_ratio(-2, 17));
  CHECK(motzkin::szsz_exact({6, 4, 9}) == exact_ratio(-883, 15511));
}

TEST_CASE("spin-spin correlator equals the state-vector expectation at "
          "mirror pairs") {
  const std::vector<std::array<int, 3>> cases = {
      {6, 2, 5}, {8, 3, 6}, {10, 3, 8}, {10, 4, 7}, {12, 4, 9}, {12, 5, 8}};
  for (const auto& c : cases) {
    const double combinatorial =
        motzkin::szsz_exact({c[0] / 2, c[1], c[2]});
    CHECK(std::fabs(combinatorial - state_szsz(c[0], c[1], c[2])) < 1e-12);
  }
}

TEST_CASE("spin-spin correlator reversal symmetry and guards") {
  CHECK(motzkin::szsz_exact({6, 3, 7}) ==
        doctest::Approx(motzkin::szsz_exact({6, 6, 10})).epsilon(1e-13));
  CHECK_THROWS_AS(motzkin::szsz_exact({2, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(motzkin::szsz_exact({4, 1, 5}), std::invalid_argument);
  CHECK_THROWS_AS(motzkin::szsz_exact({4, 2, 8}), std::invalid_argument);
  CHECK_THROWS_AS(motzkin::szsz_exact({151, 20, 40}), std::invalid_argument);
}

TEST_CASE("excursion height density") {
  for (double lambda : {0.1, 0.5, 0.9}) {
    const double cutoff = 12.0 * std::sqrt(lambda * (1.0 - lambda));
    const double norm = motzkin::integrate(
        [lambda](double x) { return motzkin::excursion_density(lambda, x); },
        0.0, cutoff, 1e-12);
    CHECK(std::fabs(norm - 1.0) < 1e-10);
    const double first = motzkin::integrate(
        [lambda](double x) {
          return x * motzkin::excursion_density(lambda, x);
        },
        0.0, cutoff, 1e-12);
    CHECK(first == doctest::Approx(2.0 * std::sqrt(2.0 * lambda *
                                                   (1.0 - lambda) / kPi))
                       .epsilon(1e-9));
    const double second = motzkin::integrate(
        [lambda](double x) {
          return x * x * motzkin::excursion_density(lambda, x);
        },
        0.0, cutoff, 1e-12);
    CHECK(second ==
          doctest::Approx(3.0 * lambda * (1.0 - lambda)).epsilon(1e-9));
  }
  CHECK(motzkin::excursion_density(0.4, -1.0) == 0.0);
  CHECK(motzkin::excursion_density(0.4, 0.0) == 0.0);
  CHECK_THROWS_AS(motzkin::excursion_density(0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(motzkin::excursion_density(1.0, 0.5), std::invalid_argument);
}

TEST_CASE("excursion moments") {
  CHECK(motzkin::excursion_moments({0.5, {}, 64}).second == 64.0);
  for (double lambda : {0.2, 0.5, 0.7}) {
    const ExcursionPoint e{lambda, {}, 50};
    const auto m = motzkin::excursion_moments(e);
    const double variance = m.second - m.mean * m.mean;
    CHECK(variance == doctest::Approx(4.0 * 50 * lambda * (1.0 - lambda) *
                                      (1.0 - 8.0 / (3.0 * kPi)))
                          .epsilon(1e-12));
  }
  // Rescaled mean coincides with the near-boundary height asymptotic.
  const auto m = motzkin::excursion_moments({0.3, {}, 50});
  CHECK(m.mean ==
        doctest::Approx(motzkin::expected_height_asymptotic({50, 30, {}}))
            .epsilon(1e-12));
  CHECK_THROWS_AS(motzkin::excursion_moments({0.3, 0.6, 50}),
                  std::invalid_argument);
  CHECK_THROWS_AS(motzkin::excursion_moments({0.3, {}, 0}),
                  std::invalid_argument);
}

TEST_CASE("excursion two-point closed forms against quadrature") {
  const double sigma2 = 2.0 / 3.0;
  for (const auto& [lambda, mu] : std::vector<std::pair<double, double>>{
           {0.3, 0.6}, {0.25, 0.75}}) {
    const int n = 9;
    const auto tp = motzkin::excursion_two_point({lambda, mu, n});
    const double cut1 = 12.0 * std::sqrt(lambda * (1.0 - lambda));
    const double cut2 = 12.0 * std::sqrt(mu * (1.0 - mu));
    const double quad =
        2.0 * n * sigma2 *
        motzkin::integrate2d(
            [&](double x1, double x2) {
              return x1 * x2 *
                     motzkin::excursion_two_point_density(lambda, mu, x1, x2);
            },
            0.0, cut1, 0.0, cut2, 1e-10);
    CHECK(std::fabs(quad - tp.joint) < 1e-6 * tp.joint);
    const double norm = motzkin::integrate2d(
        [&](double x1, double x2) {
          return motzkin::excursion_two_point_density(lambda, mu, x1, x2);
        },
        0.0, cut1, 0.0, cut2, 1e-10);
    CHECK(std::fabs(norm - 1.0) < 1e-8);
    // Product term equals the product of the one-point means.
    const double mean1 = motzkin::excursion_moments({lambda, {}, n}).mean;
    const double mean2 = motzkin::excursion_moments({mu, {}, n}).mean;
    CHECK(tp.product == doctest::Approx(mean1 * mean2).epsilon(1e-12));
  }
  const auto near = motzkin::excursion_two_point({0.4, 0.5, 7});
  CHECK(near.joint - near.product > 0.0);
  CHECK_THROWS_AS(motzkin::excursion_two_point({0.6, 0.3, 7}),
                  std::invalid_argument);
  CHECK_THROWS_AS(motzkin::excursion_two_point({0.3, {}, 7}),
                  std::invalid_argument);
}

TEST_CASE("excursion joint density structure") {
  CHECK(motzkin::excursion_two_point_density(0.3, 0.6, -0.5, 1.0) == 0.0);
  CHECK(motzkin::excursion_two_point_density(0.3, 0.6, 1.0, -0.5) == 0.0);
  CHECK(motzkin::excursion_two_point_density(0.3, 0.6, 1.0, 0.0) == 0.0);
  // Transition factor is symmetric in the two heights: over a
  // lambda <-> 1-mu symmetric window the density itself is symmetric.
  CHECK(motzkin::excursion_two_point_density(0.3, 0.7, 1.2, 0.4) ==
        doctest::Approx(motzkin::excursion_two_point_density(0.3, 0.7, 0.4,
                                                             1.2))
            .epsilon(1e-13));
  // Absorption at the origin kills the density cubically.
  const double f1 = motzkin::excursion_two_point_density(0.3, 0.6, 1.0, 1e-3);
  const double f2 = motzkin::excursion_two_point_density(0.3, 0.6, 1.0, 2e-3);
  CHECK(f2 / f1 == doctest::Approx(8.0).epsilon(0.01));
  CHECK_THROWS_AS(motzkin::excursion_two_point_density(0.6, 0.3, 1.0, 1.0),
                  std::invalid_argument);
}
