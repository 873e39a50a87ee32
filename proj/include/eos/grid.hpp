#pragma once

#include <cmath>
#include <vector>

namespace eos {

/// Internal nodes of the scattering interval (a0, a1).
///
/// The epsilon family interpolates between the uniform grid (epsilon = 0,
/// boundary gaps equal to dx) and the cell-centred production grid
/// (epsilon = 1, boundary gaps equal to dx/2):
///
///   dx  = (N + eps) / (N (N + 1)) * (a1 - a0)
///   x_i = a0 + (i + 1 - eps/2) * dx,   i = 0 .. N-1
///
/// Boundary traces live at a0 and a1 and are not part of `nodes`.
struct GridSpec {
    double a0 = 0.0;
    double a1 = 1.0;
    int n = 0;
    double epsilon = 1.0;
    double dx = 0.0;
    std::vector<double> nodes;

    double length() const { return a1 - a0; }
    double left_gap() const { return nodes.front() - a0; }
    double right_gap() const { return a1 - nodes.back(); }
};

/// Throws std::invalid_argument unless a0 < a1, N >= 4 and 0 <= eps <= 1.
GridSpec build_grid(double a0, double a1, int n, double epsilon = 1.0);

struct Material1 {
    double c1 = 1.0;  // interior speed
    double c0 = 1.0;  // exterior speed
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

struct Material2 {
    double mu1 = 1.0;
    double nu1 = 1.0;
    double mu0 = 1.0;
    double nu0 = 1.0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;

    double c1() const { return std::sqrt(mu1 * nu1); }
    double c0() const { return std::sqrt(mu0 * nu0); }
};

/// Throws std::invalid_argument on non-positive speeds or coefficients.
void validate(const Material1& mat);
void validate(const Material2& mat);

}  // namespace eos
