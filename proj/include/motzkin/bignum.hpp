#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace motzkin {

// Exact walk counts.  N ~ 3^{2n} overflows fixed-width integers beyond
// 2n ~ 40, so every count is arbitrary precision end to end.
using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num/den reduced exactly, then rounded once to double.
double ratio_as_double(const Count& num, const Count& den);
double rational_as_double(const Rational& r);

// log of a positive big integer, relative error well under 1e-15.
double log_big(const Count& x);

// Compensated (Kahan) accumulator for sums whose terms span many orders
// of magnitude.
class KahanSum {
 public:
  void add(double term) {
    double y = term - carry_;
    double t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace motzkin
