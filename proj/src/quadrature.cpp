#include <motzkin/quadrature.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <stdexcept>

namespace motzkin {

namespace {
using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  if (!(a < b)) throw std::invalid_argument("integrate: need a < b");
  double error = 0.0;
  double value = Rule::integrate(f, a, b, 15, tol, &error);
  return value;
}

double integrate2d(const std::function<double(double, double)>& f, double ax,
                   double bx, double ay, double by, double tol) {
  if (!(ax < bx) || !(ay < by)) {
    throw std::invalid_argument("integrate2d: empty rectangle");
  }
  auto outer = [&](double x) {
    auto inner = [&](double y) { return f(x, y); };
    return integrate(inner, ay, by, tol * 0.1);
  };
  return integrate(outer, ax, bx, tol);
}

}  // namespace motzkin
