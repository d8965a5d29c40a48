#pragma once

#include <functional>

namespace motzkin {

// Adaptive Gauss-Kronrod integration of f over [a, b] to absolute
// tolerance tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10);

// Iterated 2D integral of f over [ax, bx] x [ay, by]; the inner
// integral is evaluated one order tighter than the outer.
double integrate2d(const std::function<double(double, double)>& f, double ax,
                   double bx, double ay, double by, double tol = 1e-9);

}  // namespace motzkin
