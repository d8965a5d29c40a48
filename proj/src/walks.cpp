#include <motzkin/walks.hpp>

#include <motzkin/config.hpp>

#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace motzkin {

namespace {

std::mutex g_binomial_mutex;
std::map<int, std::vector<Count>> g_binomial_rows;

const std::vector<Count>& binomial_row_locked(int n) {
  auto it = g_binomial_rows.find(n);
  if (it != g_binomial_rows.end()) return it->second;
  std::vector<Count> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (int k = 1; k <= n; ++k) {
    // C(n,k) = C(n,k-1) * (n-k+1) / k, exact at every step.
    row[static_cast<std::size_t>(k)] =
        row[static_cast<std::size_t>(k - 1)] * (n - k + 1) / k;
  }
  return g_binomial_rows.emplace(n, std::move(row)).first->second;
}

std::mutex g_factorial_mutex;
std::vector<Count> g_factorials = {Count(1)};

void validate(const WalkEndpoints& e, const char* op) {
  if (e.steps < 0 || e.start_height < 0 || e.end_height < 0) {
    throw std::invalid_argument(std::string(op) +
                                ": steps and heights must be nonnegative");
  }
}

struct HistKey {
  int steps;
  int start;
  bool allow_flat;
  bool operator<(const HistKey& o) const {
    if (steps != o.steps) return steps < o.steps;
    if (start != o.start) return start < o.start;
    return allow_flat < o.allow_flat;
  }
};

std::mutex g_hist_mutex;
std::map<HistKey, std::vector<std::uint64_t>> g_histograms;

void enumerate_walks(int steps_left, int height, bool allow_flat,
                     std::vector<std::uint64_t>& hist) {
  if (steps_left == 0) {
    ++hist[static_cast<std::size_t>(height)];
    return;
  }
  enumerate_walks(steps_left - 1, height + 1, allow_flat, hist);
  if (allow_flat) enumerate_walks(steps_left - 1, height, allow_flat, hist);
  if (height > 0) enumerate_walks(steps_left - 1, height - 1, allow_flat, hist);
}

}  // namespace

Count binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::lock_guard<std::mutex> lock(g_binomial_mutex);
  return binomial_row_locked(n)[static_cast<std::size_t>(k)];
}

Count factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  std::lock_guard<std::mutex> lock(g_factorial_mutex);
  while (static_cast<int>(g_factorials.size()) <= n) {
    g_factorials.push_back(g_factorials.back() *
                           static_cast<int>(g_factorials.size()));
  }
  return g_factorials[static_cast<std::size_t>(n)];
}

Count dyck_count(const WalkEndpoints& e) {
  validate(e, "dyck_count");
  const int L = e.steps;
  const int diff = std::abs(e.end_height - e.start_height);
  if (diff > L || (L + diff) % 2 != 0) return 0;
  return binomial(L, (L + diff) / 2) -
         binomial(L, (L + e.start_height + e.end_height) / 2 + 1);
}

Count motzkin_count(const WalkEndpoints& e) {
  validate(e, "motzkin_count");
  const int L = e.steps;
  const int diff = std::abs(e.end_height - e.start_height);
  if (diff > L) return 0;
  Count total = 0;
  for (int flats = 0; flats <= L - diff; ++flats) {
    if ((L - flats - diff) % 2 != 0) continue;
    total += binomial(L, flats) *
             dyck_count({L - flats, e.start_height, e.end_height});
  }
  return total;
}

Count motzkin_number(int two_n) {
  if (two_n < 0) throw std::invalid_argument("motzkin_number: negative length");
  return motzkin_count({two_n, 0, 0});
}

Count catalan(int i) {
  if (i < 0) throw std::invalid_argument("catalan: negative index");
  return binomial(2 * i, i) / (i + 1);
}

Count brute_force_count(const WalkEndpoints& e, bool allow_flat) {
  validate(e, "brute_force_count");
  if (e.steps > config::kBruteForceMaxSteps) {
    throw std::invalid_argument("brute_force_count: steps " +
                                std::to_string(e.steps) + " exceeds limit " +
                                std::to_string(config::kBruteForceMaxSteps));
  }
  const int max_height = e.start_height + e.steps;
  if (e.end_height > max_height) return 0;
  HistKey key{e.steps, e.start_height, allow_flat};
  std::lock_guard<std::mutex> lock(g_hist_mutex);
  auto it = g_histograms.find(key);
  if (it == g_histograms.end()) {
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(max_height) + 1, 0);
    enumerate_walks(e.steps, e.start_height, allow_flat, hist);
    it = g_histograms.emplace(key, std::move(hist)).first;
  }
  return Count(it->second[static_cast<std::size_t>(e.end_height)]);
}

double bad_walk_fraction_bound(int b, int L) {
  if (b < 1) throw std::invalid_argument("bad_walk_fraction_bound: b must be >= 1");
  if (L < 0) throw std::invalid_argument("bad_walk_fraction_bound: negative L");
  return L * std::sqrt(b / 2.0) * std::pow(2.0 / 3.0, b + 1);
}

}  // namespace motzkin
