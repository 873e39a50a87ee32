#include "eos/grid.hpp"

#include <stdexcept>
#include <string>

namespace eos {

GridSpec build_grid(double a0, double a1, int n, double epsilon) {
    if (!(a0 < a1)) {
        throw std::invalid_argument("grid: a0 must be smaller than a1");
    }
    if (n < 4) {
        throw std::invalid_argument("grid: N must be >= 4");
    }
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw std::invalid_argument("grid: epsilon must lie in [0, 1]");
    }

    GridSpec g;
    g.a0 = a0;
    g.a1 = a1;
    g.n = n;
    g.epsilon = epsilon;
    const double nn = static_cast<double>(n);
    g.dx = (nn + epsilon) / (nn * (nn + 1.0)) * (a1 - a0);
    g.nodes.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        g.nodes[static_cast<std::size_t>(i)] = a0 + (i + 1.0 - 0.5 * epsilon) * g.dx;
    }
    return g;
}

void validate(const Material1& mat) {
    if (!(mat.c1 > 0.0) || !(mat.c0 > 0.0)) {
        throw std::invalid_argument("material: c1 and c0 must be positive");
    }
}

void validate(const Material2& mat) {
    if (!(mat.mu1 > 0.0) || !(mat.nu1 > 0.0) || !(mat.mu0 > 0.0) || !(mat.nu0 > 0.0)) {
        throw std::invalid_argument("material: mu1, nu1, mu0, nu0 must be positive");
    }
}

}  // namespace eos
