#include "eos/stencils.hpp"

#include <stdexcept>

namespace eos {

ThreePointWeights three_point_weights(double hl, double hr) {
    ThreePointWeights w;
    w.d1 = {-hr / (hl * (hl + hr)), (hr - hl) / (hl * hr), hl / (hr * (hl + hr))};
    w.d2 = {2.0 / (hl * (hl + hr)), -2.0 / (hl * hr), 2.0 / (hr * (hl + hr))};
    return w;
}

Stencils::Stencils(const GridSpec& grid)
    : n_(grid.n),
      dx_(grid.dx),
      left_(three_point_weights(grid.left_gap(), grid.dx)),
      right_(three_point_weights(grid.dx, grid.right_gap())) {
    if (n_ < 4) {
        throw std::invalid_argument("Stencils: need at least 4 internal nodes");
    }
}

namespace {

void check(std::span<const double> f, std::span<double> out, int n) {
    if (f.size() != static_cast<std::size_t>(n) || out.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("Stencils: array length does not match grid");
    }
}

}  // namespace

void Stencils::d1(std::span<const double> f, double f_a0, double f_a1, std::span<double> out) const {
    check(f, out, n_);
    const auto last = static_cast<std::size_t>(n_ - 1);
    const double inv2dx = 0.5 / dx_;
    out[0] = left_.d1[0] * f_a0 + left_.d1[1] * f[0] + left_.d1[2] * f[1];
    for (std::size_t i = 1; i < last; ++i) {
        out[i] = (f[i + 1] - f[i - 1]) * inv2dx;
    }
    out[last] = right_.d1[0] * f[last - 1] + right_.d1[1] * f[last] + right_.d1[2] * f_a1;
}

void Stencils::d2(std::span<const double> f, double f_a0, double f_a1, std::span<double> out) const {
    check(f, out, n_);
    const auto last = static_cast<std::size_t>(n_ - 1);
    const double invdx2 = 1.0 / (dx_ * dx_);
    out[0] = left_.d2[0] * f_a0 + left_.d2[1] * f[0] + left_.d2[2] * f[1];
    for (std::size_t i = 1; i < last; ++i) {
        out[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) * invdx2;
    }
    out[last] = right_.d2[0] * f[last - 1] + right_.d2[1] * f[last] + right_.d2[2] * f_a1;
}

void Stencils::d1_interior(std::span<const double> f, std::span<double> out) const {
    check(f, out, n_);
    const auto last = static_cast<std::size_t>(n_ - 1);
    const double inv2dx = 0.5 / dx_;
    out[0] = (4.0 * f[1] - 3.0 * f[0] - f[2]) * inv2dx;
    for (std::size_t i = 1; i < last; ++i) {
        out[i] = (f[i + 1] - f[i - 1]) * inv2dx;
    }
    out[last] = -(4.0 * f[last - 1] - 3.0 * f[last] - f[last - 2]) * inv2dx;
}

}  // namespace eos
