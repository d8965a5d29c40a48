#pragma once

// Reference implementations used only by the tests.  Everything here is
// derived independently of the library under test: binomials come from
// plain factorial ratios (no Pascal cache), walk counts from a memoized
// first-step recursion and from ballot/trinomial closed forms (no
// reflection subtraction), and expectation values from direct walk
// enumeration.  Agreement between these and the library is the backbone
// of the suite.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Big = boost::multiprecision::cpp_bin_float_100;

inline Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Int choose(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

// Walks of `steps` steps from height `start` to height `end`, never
// dipping below 0; steps are +-1, plus 0 when allow_flat.  Recursion on
// the first step.
inline Int path_count(int steps, int start, int end, bool allow_flat) {
  static std::map<std::tuple<int, int, int, bool>, Int> memo;
  if (start < 0 || end < 0) return 0;
  if (steps == 0) return start == end ? Int(1) : Int(0);
  const auto key = std::make_tuple(steps, start, end, allow_flat);
  const auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Int total = path_count(steps - 1, start + 1, end, allow_flat);
  if (allow_flat) total += path_count(steps - 1, start, end, allow_flat);
  if (start > 0) total += path_count(steps - 1, start - 1, end, allow_flat);
  return memo.emplace(key, std::move(total)).first->second;
}

// Ballot-style closed form for +-1 walks 0 -> m staying nonnegative:
// ((m+1)/(L+1)) C(L+1, (L-m)/2).
inline Int ballot_dyck(int L, int m) {
  if (L < 0 || m < 0 || m > L || (L - m) % 2 != 0) return 0;
  const Int num = Int(m + 1) * choose(L + 1, (L - m) / 2);
  if (num % (L + 1) != 0) throw std::logic_error("ballot_dyck: not integral");
  return num / (L + 1);
}

// Flat-step closed form for {+1,0,-1} walks 0 -> m staying nonnegative:
// ((m+1)/(L+1)) sum_i (L+1)! / ((L-2i-m)! i! (i+m+1)!).
inline Int trinomial_motzkin(int L, int m) {
  if (L < 0 || m < 0 || m > L) return 0;
  Int sum = 0;
  for (int i = 0; 2 * i + m <= L; ++i) {
    sum += factorial(L + 1) /
           (factorial(L - 2 * i - m) * factorial(i) * factorial(i + m + 1));
  }
  const Int num = Int(m + 1) * sum;
  if (num % (L + 1) != 0) {
    throw std::logic_error("trinomial_motzkin: not integral");
  }
  return num / (L + 1);
}

// Height-unconstrained {+1,0,-1} walks of length L with net
// displacement p: sum_i L! / ((L-2i-|p|)! (i+|p|)! i!).
inline Int free_count(int L, int p) {
  const int q = p < 0 ? -p : p;
  if (q > L) return 0;
  Int sum = 0;
  for (int i = 0; 2 * i + q <= L; ++i) {
    sum += factorial(L) /
           (factorial(L - 2 * i - q) * factorial(i + q) * factorial(i));
  }
  return sum;
}

// Exact trinomial coefficient L!/(i! j! k!) with i+j+k = L.
inline Int trinomial_coeff(int L, int i, int j, int k) {
  if (i < 0 || j < 0 || k < 0 || i + j + k != L) return 0;
  return factorial(L) / (factorial(i) * factorial(j) * factorial(k));
}

// log of a positive big integer through 100-decimal-digit floats.
inline double log_int(const Int& x) {
  if (x <= 0) throw std::invalid_argument("log_int: nonpositive argument");
  return static_cast<double>(boost::multiprecision::log(Big(x)));
}

// Every {+1,0,-1} walk of the given length staying nonnegative and
// returning to 0, emitted as its step sequence (entries +1, 0, -1).
// Prunes branches that cannot return to 0 in the remaining steps.
inline void for_each_motzkin_walk(
    int length, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> steps(static_cast<std::size_t>(length));
  std::function<void(int, int)> rec = [&](int pos, int h) {
    if (pos == length) {
      if (h == 0) fn(steps);
      return;
    }
    for (int s : {+1, 0, -1}) {
      const int nh = h + s;
      if (nh < 0 || nh > length - pos - 1) continue;
      steps[static_cast<std::size_t>(pos)] = s;
      rec(pos + 1, nh);
    }
  };
  rec(0, 0);
}

inline bool is_motzkin_steps(const std::vector<int>& steps) {
  int h = 0;
  for (const int s : steps) {
    h += s;
    if (h < 0) return false;
  }
  return h == 0;
}

// Base-3 index of a step sequence under the library's convention:
// site 1 is the most significant digit and digit = 1 - step (so u=0,
// flat=1, d=2).
inline std::int64_t config_index(const std::vector<int>& steps) {
  std::int64_t idx = 0;
  for (const int s : steps) idx = idx * 3 + (1 - s);
  return idx;
}

inline int digit_of(std::int64_t index, int site, int length) {
  for (int i = length; i > site; --i) index /= 3;
  return static_cast<int>(index % 3);
}

}  // namespace oracle
