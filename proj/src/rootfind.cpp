#include "becavity/rootfind.hpp"

#include <algorithm>

namespace becavity {

namespace {

double eval_cubic(double c3, double c2, double c1, double c0, double x) {
    return ((c3 * x + c2) * x + c1) * x + c0;
}

double polish(double c3, double c2, double c1, double c0, double x) {
    for (int i = 0; i < 4; ++i) {
        double f = eval_cubic(c3, c2, c1, c0, x);
        double df = (3.0 * c3 * x + 2.0 * c2) * x + c1;
        if (df == 0.0) break;
        double step = f / df;
        x -= step;
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

} // namespace

CubicRoots solve_cubic(double c3, double c2, double c1, double c0) {
    CubicRoots r;
    const double scale = std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
    if (scale == 0.0) return r;
    if (std::abs(c3) < 1e-14 * scale) {
        // quadratic (or linear)
        if (std::abs(c2) < 1e-14 * scale) {
            if (c1 != 0.0) r.x[r.count++] = -c0 / c1;
            return r;
        }
        const double disc = c1 * c1 - 4.0 * c2 * c0;
        if (disc < 0.0) return r;
        const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
        r.x[r.count++] = q / c2;
        if (q != 0.0) r.x[r.count++] = c0 / q;
        else r.x[r.count++] = 0.0;
        std::sort(r.x.begin(), r.x.begin() + r.count);
        return r;
    }

    // normalized: x^3 + a x^2 + b x + c
    const double a = c2 / c3, b = c1 / c3, c = c0 / c3;
    const double q = (a * a - 3.0 * b) / 9.0;
    const double rr = (2.0 * a * a * a - 9.0 * a * b + 27.0 * c) / 54.0;
    const double q3 = q * q * q;
    if (rr * rr < q3) {
        const double theta = std::acos(std::clamp(rr / std::sqrt(q3), -1.0, 1.0));
        const double m = -2.0 * std::sqrt(q);
        r.x[0] = m * std::cos(theta / 3.0) - a / 3.0;
        r.x[1] = m * std::cos((theta + 2.0 * M_PI) / 3.0) - a / 3.0;
        r.x[2] = m * std::cos((theta - 2.0 * M_PI) / 3.0) - a / 3.0;
        r.count = 3;
    } else {
        const double s = -std::copysign(std::cbrt(std::abs(rr) + std::sqrt(rr * rr - q3)), rr);
        const double t = (s != 0.0) ? q / s : 0.0;
        r.x[0] = s + t - a / 3.0;
        r.count = 1;
    }
    for (int i = 0; i < r.count; ++i) r.x[i] = polish(c3, c2, c1, c0, r.x[i]);
    std::sort(r.x.begin(), r.x.begin() + r.count);
    return r;
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double rel_tol,
              int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0)) throw std::runtime_error("bisect: interval does not bracket a root");
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo <= rel_tol * std::max(std::abs(lo), std::abs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

} // namespace becavity
