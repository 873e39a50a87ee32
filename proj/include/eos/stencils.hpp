#pragma once

#include <array>
#include <span>

#include "eos/grid.hpp"

namespace eos {

/// Weights of the quadratic through three points at offsets -h_left, 0 and
/// +h_right from the evaluation point.
struct ThreePointWeights {
    std::array<double, 3> d1{};  // first derivative
    std::array<double, 3> d2{};  // second derivative
};

ThreePointWeights three_point_weights(double h_left, double h_right);

/// Finite-difference operators on the internal nodes of a grid.
///
/// Interior nodes 1..N-2 use central differences.  Node 0 uses the quadratic
/// through (a0, x_0, x_1) and node N-1 the one through (x_{N-2}, x_{N-1}, a1);
/// on the epsilon = 1 grid these are the familiar
///   phi_x(0)  = -(4 phi_a0 - 3 phi_0 - phi_1) / (3 dx)
///   phi_xx(0) = 4 (2 phi_a0 - 3 phi_0 + phi_1) / (3 dx^2).
/// Quantities confined to the object (current, material forcing) are
/// differentiated with the one-sided rules that only touch internal nodes.
class Stencils {
public:
    explicit Stencils(const GridSpec& grid);

    int size() const { return n_; }
    double dx() const { return dx_; }
    const ThreePointWeights& left() const { return left_; }
    const ThreePointWeights& right() const { return right_; }

    /// First derivative of a field with boundary traces.
    void d1(std::span<const double> f, double f_a0, double f_a1, std::span<double> out) const;
    /// Second derivative of a field with boundary traces.
    void d2(std::span<const double> f, double f_a0, double f_a1, std::span<double> out) const;
    /// First derivative using internal nodes only (edge nodes one-sided).
    void d1_interior(std::span<const double> f, std::span<double> out) const;

private:
    int n_;
    double dx_;
    ThreePointWeights left_;   // points a0, x_0, x_1
    ThreePointWeights right_;  // points x_{N-2}, x_{N-1}, a1
};

}  // namespace eos
