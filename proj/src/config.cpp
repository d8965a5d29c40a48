#include <motzkin/config.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace motzkin::config {

namespace {
int g_rational_crossover_two_n = 120;
}  // namespace

int rational_crossover_two_n() { return g_rational_crossover_two_n; }

void set_rational_crossover_two_n(int two_n) {
  if (two_n < 0) throw std::invalid_argument("crossover must be nonnegative");
  g_rational_crossover_two_n = two_n;
}

int effective_two_n_limit(int default_limit) {
  const char* env = std::getenv("MOTZKIN_MAX_2N");
  if (env == nullptr || *env == '\0') return default_limit;
  try {
    int v = std::stoi(env);
    if (v > 0) return v;
  } catch (const std::exception&) {
  }
  return default_limit;
}

void check_two_n(int two_n, int default_limit, const std::string& op) {
  if (two_n < 1) {
    throw std::invalid_argument(op + ": chain length must be positive, got " +
                                std::to_string(two_n));
  }
  int limit = effective_two_n_limit(default_limit);
  if (two_n > limit) {
    throw std::invalid_argument(op + ": chain length " + std::to_string(two_n) +
                                " exceeds limit " + std::to_string(limit) +
                                " (override with MOTZKIN_MAX_2N)");
  }
}

}  // namespace motzkin::config
