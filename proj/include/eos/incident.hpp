#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "eos/errors.hpp"
#include "eos/grid.hpp"
#include "eos/source.hpp"

namespace eos {

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_floor = 1e-14;
    int min_level = 6;   // 8 * 2^6 = 512 panels before convergence is trusted
    int max_level = 20;  // panel cap 8 * 2^20
};

/// Composite midpoint rule with `panels` equal panels.
template <class F>
double midpoint_rule(F&& f, double a, double b, long panels) {
    const double h = (b - a) / static_cast<double>(panels);
    double sum = 0.0;
    for (long k = 0; k < panels; ++k) {
        sum += f(a + (static_cast<double>(k) + 0.5) * h);
    }
    return sum * h;
}

/// Midpoint rule with panel doubling and Richardson
/// extrapolation of the h^2, h^4, ... error terms.  Stops when two successive
/// diagonal entries differ by less than max(rel_tol * |R|, abs_floor).
/// Throws QuadratureError at the panel cap.
template <class F>
double integrate_midpoint(F&& f, double a, double b, const QuadratureOptions& opt = {}) {
    if (!(b > a)) {
        return 0.0;
    }
    std::vector<double> prev, cur;
    long panels = 8;
    double h = (b - a) / static_cast<double>(panels);
    double sum = 0.0;
    for (long k = 0; k < panels; ++k) {
        sum += f(a + (static_cast<double>(k) + 0.5) * h);
    }
    prev.push_back(sum * h);
    double diff = 0.0;
    for (int level = 1; level <= opt.max_level; ++level) {
        panels *= 2;
        h *= 0.5;
        sum = 0.0;
        for (long k = 0; k < panels; ++k) {
            sum += f(a + (static_cast<double>(k) + 0.5) * h);
        }
        cur.assign(1, sum * h);
        double factor = 1.0;
        for (int m = 1; m <= level; ++m) {
            factor *= 4.0;
            cur.push_back(cur[m - 1] + (cur[m - 1] - prev[m - 1]) / (factor - 1.0));
        }
        diff = std::abs(cur.back() - prev.back());
        if (level >= opt.min_level && diff <= std::max(opt.rel_tol * std::abs(cur.back()), opt.abs_floor)) {
            return cur.back();
        }
        prev.swap(cur);
    }
    throw QuadratureError("midpoint quadrature did not converge on [" + std::to_string(a) + ", " +
                              std::to_string(b) + "]",
                          diff);
}

/// Integral of j_s(x', t - (x' - a1)/c0) over the part of the source support
/// inside the light cone [a1, a1 + c0 (t - t0)].
double characteristic_integral(const SourceSpec& source, double a1, double c0, double t0, double t,
                               const QuadratureOptions& opt = {});

/// Field at a1 driven by the external source in model 1.
double phi_a1_model1(const SourceSpec& source, const Material1& mat, double a1, double t0, double t,
                     const QuadratureOptions& opt = {});

struct FieldPair {
    double phi = 0.0;
    double psi = 0.0;
};

/// Incident (phi, psi) pair at a1 for model 2.
FieldPair incident_pair(const SourceSpec& source, const Material2& mat, double a1, double t0, double t,
                        const QuadratureOptions& opt = {});

}  // namespace eos
