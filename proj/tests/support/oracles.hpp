#pragma once

#include <cmath>
#include <functional>

namespace oracle {

/// Closed form of the integral over [lo, hi] of
///   A exp(-alpha1 (x - xo)^2 - beta1 (t - (x - a1)/c0 - ts)^2) dx
/// by completing the square.
inline double gaussian_characteristic_integral(double amp, double xo, double alpha1, double ts, double beta1,
                                               double a1, double c0, double t, double lo, double hi) {
    if (!(hi > lo)) {
        return 0.0;
    }
    const double s = t - ts + a1 / c0;
    const double a = alpha1 + beta1 / (c0 * c0);
    const double b = alpha1 * xo + beta1 * s / c0;
    const double c = alpha1 * xo * xo + beta1 * s * s;
    const double m = b / a;
    const double ra = std::sqrt(a);
    const double zl = ra * (lo - m);
    const double zh = ra * (hi - m);
    double diff;
    if (zl >= 0.0) {
        diff = std::erfc(zl) - std::erfc(zh);
    } else if (zh <= 0.0) {
        diff = std::erfc(-zh) - std::erfc(-zl);
    } else {
        diff = std::erf(zh) - std::erf(zl);
    }
    return amp * std::exp(b * m - c) * std::sqrt(M_PI) / (2.0 * ra) * diff;
}

/// Fourth-order central difference of f at x.
inline double d1(const std::function<double(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

/// Fourth-order central second difference.
inline double d2(const std::function<double(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
}

inline double rel_err(double got, double want) {
    if (want == 0.0) {
        return std::abs(got);
    }
    return std::abs(got - want) / std::abs(want);
}

}  // namespace oracle
