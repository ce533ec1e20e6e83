#ifndef BECAVITY_ROOTFIND_HPP_
#define BECAVITY_ROOTFIND_HPP_

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace becavity {

// Real roots of c3 x^3 + c2 x^2 + c1 x + c0, ascending. Degenerate leading
// coefficients fall back to the quadratic/linear case. Roots are polished
// with a few Newton steps.
struct CubicRoots {
    std::array<double, 3> x{};
    int count = 0;
};

CubicRoots solve_cubic(double c3, double c2, double c1, double c0);

// Bisection on a bracketing interval [lo, hi] with f(lo), f(hi) of opposite
// sign; relative tolerance on the root.
double bisect(const std::function<double(double)>& f, double lo, double hi, double rel_tol,
              int max_iter = 200);

} // namespace becavity

#endif
