#include <motzkin/bignum.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>

namespace motzkin {

namespace {
using Float50 = boost::multiprecision::cpp_bin_float_50;
}  // namespace

double ratio_as_double(const Count& num, const Count& den) {
  if (den == 0) throw std::domain_error("ratio_as_double: zero denominator");
  Float50 r = Float50(num) / Float50(den);
  return r.convert_to<double>();
}

double rational_as_double(const Rational& q) {
  Float50 r = Float50(boost::multiprecision::numerator(q)) /
              Float50(boost::multiprecision::denominator(q));
  return r.convert_to<double>();
}

double log_big(const Count& n) {
  if (n <= 0) throw std::domain_error("log_big: nonpositive argument");
  Float50 x(n);
  return boost::multiprecision::log(x).convert_to<double>();
}

}  // namespace motzkin
