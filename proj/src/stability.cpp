#include "eos/stability.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <random>
#include <string>
#include <thread>

#include "eos/errors.hpp"
#include "eos/model1.hpp"
#include "eos/model2.hpp"
#include "eos/spectral.hpp"
#include "eos/stencils.hpp"

namespace eos {

unsigned scan_threads() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("EOS_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) {
                return static_cast<unsigned>(std::min<long>(v, 256));
            }
        } catch (const std::exception&) {
        }
    }
    return hw;
}

namespace {

template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(scan_threads(), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count || failed.load()) {
                    return;
                }
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) {
                        error = std::current_exception();
                    }
                    return;
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

Material1 decoupled(double c) {
    Material1 m;
    m.c1 = c;
    return m;
}

double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

}  // namespace

void homogeneous_step_m1(const GridSpec& grid, double c, double kappa, double dt, std::span<const double> phi,
                         std::span<double> out, double b_a0, double b_a1) {
    const Stencils st(grid);
    State1 s(grid.n);
    std::copy(phi.begin(), phi.end(), s.phi.begin());
    s.phi_a0 = b_a0;
    s.phi_a1 = b_a1;
    State1 next(grid.n);
    interior_step_m1(st, grid, decoupled(c), {c, kappa}, dt, s, nullptr, next);
    std::copy(next.phi.begin(), next.phi.end(), out.begin());
}

void homogeneous_step_m2(const GridSpec& grid, double mu, double nu, double dt, std::span<const double> u,
                         std::span<double> out) {
    const Stencils st(grid);
    const int n = grid.n;
    State2 s(n);
    std::copy(u.begin(), u.begin() + n, s.phi.begin());
    std::copy(u.begin() + n, u.begin() + 2 * n, s.psi.begin());
    Material2 mat;
    mat.mu1 = mu;
    mat.nu1 = nu;
    State2 next(n);
    interior_step_m2(st, grid, mat, {mu, nu, mu * nu}, dt, s, nullptr, next);
    std::copy(next.phi.begin(), next.phi.end(), out.begin());
    std::copy(next.psi.begin(), next.psi.end(), out.begin() + n);
}

Eigen::MatrixXd propagator_m1(const GridSpec& grid, double c, double kappa, double dt) {
    const int n = grid.n;
    Eigen::MatrixXd m(n, n);
    std::vector<double> e(n, 0.0), col(n);
    for (int k = 0; k < n; ++k) {
        e[k] = 1.0;
        homogeneous_step_m1(grid, c, kappa, dt, e, col);
        e[k] = 0.0;
        for (int i = 0; i < n; ++i) {
            m(i, k) = col[i];
        }
    }
    return m;
}

PropagatorMatrix assemble_propagator(const GridSpec& grid, const Material1& mat, double dt) {
    PropagatorMatrix p;
    p.m = propagator_m1(grid, mat.c1, mat.c1 * mat.c1, dt);
    p.model = 1;
    p.n = grid.n;
    p.epsilon = grid.epsilon;
    p.dt = dt;
    return p;
}

PropagatorMatrix assemble_propagator(const GridSpec& grid, const Material2& mat, double dt) {
    const int n = grid.n;
    PropagatorMatrix p;
    p.m.resize(2 * n, 2 * n);
    std::vector<double> e(2 * n, 0.0), col(2 * n);
    for (int k = 0; k < 2 * n; ++k) {
        e[k] = 1.0;
        homogeneous_step_m2(grid, mat.mu1, mat.nu1, dt, e, col);
        e[k] = 0.0;
        for (int i = 0; i < 2 * n; ++i) {
            p.m(i, k) = col[i];
        }
    }
    p.model = 2;
    p.n = n;
    p.epsilon = grid.epsilon;
    p.dt = dt;
    return p;
}

double spectral_radius_m2(const Eigen::MatrixXd& m2, double mu, double nu) {
    const Eigen::Index n = m2.rows() / 2;
    const Eigen::MatrixXd a = m2.topLeftCorner(n, n);
    const Eigen::MatrixXd b = m2.topRightCorner(n, n);
    const Eigen::MatrixXd c = m2.bottomLeftCorner(n, n);
    const Eigen::MatrixXd d = m2.bottomRightCorner(n, n);
    const double scale = std::max(1.0, m2.cwiseAbs().maxCoeff());
    const bool diag_match = (a - d).cwiseAbs().maxCoeff() <= 1e-14 * scale;
    const bool off_match = (nu * b - mu * c).cwiseAbs().maxCoeff() <= 1e-14 * scale * std::max(mu, nu);
    if (!diag_match || !off_match) {
        return spectral_radius(m2);
    }
    // similarity diag(I, s I) with s^2 = mu / nu makes both off blocks c m2
    const Eigen::MatrixXd coupling = b / std::sqrt(mu / nu);
    return std::max(spectral_radius(a + coupling), spectral_radius(a - coupling));
}

double radius_at(const GridSpec& grid, const Material1& mat, double tau) {
    return spectral_radius(assemble_propagator(grid, mat, tau * grid.dx / mat.c1).m);
}

double radius_at(const GridSpec& grid, const Material2& mat, double tau) {
    return spectral_radius_m2(assemble_propagator(grid, mat, tau * grid.dx / mat.c1()).m, mat.mu1, mat.nu1);
}

namespace {

template <class Radius>
StabilityDomain bounds_impl(int model, const GridSpec& grid, const StabilitySearch& search, Radius&& radius) {
    if (search.scan_points < 16) {
        throw std::invalid_argument("stability scan needs at least 16 points");
    }
    if (!(search.dt_max_factor > 0.0) || !(search.bisect_tol > 0.0)) {
        throw std::invalid_argument("stability scan controls must be positive");
    }
    const int count = search.scan_points;
    StabilityDomain dom;
    dom.model = model;
    dom.n = grid.n;
    dom.epsilon = grid.epsilon;
    dom.samples.resize(count);
    const double h = search.dt_max_factor / count;
    parallel_for(static_cast<std::size_t>(count), [&](std::size_t k) {
        const double tau = h * static_cast<double>(k + 1);
        dom.samples[k] = {tau, radius(tau)};
    });
    auto stable = [&](double rho) { return rho < 1.0 - search.margin; };

    int best_lo = -1, best_hi = -1;
    for (int k = 0; k < count;) {
        if (!stable(dom.samples[k].rho)) {
            ++k;
            continue;
        }
        int e = k;
        while (e + 1 < count && stable(dom.samples[e + 1].rho)) {
            ++e;
        }
        if (best_lo < 0 || dom.samples[e].dt_over_cfl - dom.samples[k].dt_over_cfl >
                               dom.samples[best_hi].dt_over_cfl - dom.samples[best_lo].dt_over_cfl) {
            best_lo = k;
            best_hi = e;
        }
        k = e + 1;
    }
    if (best_lo < 0) {
        return dom;
    }
    auto bisect = [&](double in, double out) {
        while (std::abs(out - in) > search.bisect_tol * std::max(in, out)) {
            const double mid = 0.5 * (in + out);
            if (stable(radius(mid))) {
                in = mid;
            } else {
                out = mid;
            }
        }
        return 0.5 * (in + out);
    };
    dom.empty = false;
    dom.tau1 = best_lo == 0 ? 0.0 : bisect(dom.samples[best_lo].dt_over_cfl, dom.samples[best_lo - 1].dt_over_cfl);
    dom.tau2 = best_hi == count - 1 ? dom.samples[best_hi].dt_over_cfl
                                    : bisect(dom.samples[best_hi].dt_over_cfl, dom.samples[best_hi + 1].dt_over_cfl);
    return dom;
}

}  // namespace

StabilityDomain stability_bounds(const GridSpec& grid, const Material1& mat, const StabilitySearch& search) {
    return bounds_impl(1, grid, search, [&](double tau) { return radius_at(grid, mat, tau); });
}

StabilityDomain stability_bounds(const GridSpec& grid, const Material2& mat, const StabilitySearch& search) {
    return bounds_impl(2, grid, search, [&](double tau) { return radius_at(grid, mat, tau); });
}

std::vector<StabilityDomain> scan_stability(const Material1& mat, int n, const std::vector<double>& epsilons,
                                            const StabilitySearch& search, double a0, double a1) {
    std::vector<StabilityDomain> out;
    for (double eps : epsilons) {
        out.push_back(stability_bounds(build_grid(a0, a1, n, eps), mat, search));
    }
    return out;
}

std::vector<StabilityDomain> scan_stability(const Material2& mat, int n, const std::vector<double>& epsilons,
                                            const StabilitySearch& search, double a0, double a1) {
    std::vector<StabilityDomain> out;
    for (double eps : epsilons) {
        out.push_back(stability_bounds(build_grid(a0, a1, n, eps), mat, search));
    }
    return out;
}

DecompositionReport decomposition_check(const GridSpec& grid, const Material2& mat, double dt) {
    const double c = mat.c1();
    const double kappa = mat.mu1 * mat.nu1;
    const double ca = c;
    const double cb = 0.5 * c;
    const Eigen::MatrixXd ma = propagator_m1(grid, ca, kappa, dt);
    const Eigen::MatrixXd mb = propagator_m1(grid, cb, kappa, dt);
    const Eigen::MatrixXd mid = propagator_m1(grid, 0.5 * (ca + cb), kappa, dt);

    DecompositionReport r;
    r.m2 = (ma - mb) / (ca - cb);
    r.m1 = ma - ca * r.m2;
    r.affinity_error = (mid - 0.5 * (ma + mb)).cwiseAbs().maxCoeff();

    const int n = grid.n;
    const Eigen::MatrixXd full = assemble_propagator(grid, mat, dt).m;
    Eigen::MatrixXd block(2 * n, 2 * n);
    block << r.m1, mat.mu1 * r.m2, mat.nu1 * r.m2, r.m1;
    r.block_error = (full - block).cwiseAbs().maxCoeff();
    block.bottomLeftCorner(n, n) = -mat.nu1 * r.m2;
    r.block_error_minus = (full - block).cwiseAbs().maxCoeff();
    for (int i = 1; i + 1 < n; ++i) {
        r.m2_interior_diagonal = std::max(r.m2_interior_diagonal, std::abs(r.m2(i, i)));
    }
    return r;
}

FixedPointReport fixed_point_check(const GridSpec& grid, const Material1& mat, double dt, double b_a0, double b_a1,
                                   int max_iterations, double tol) {
    const int n = grid.n;
    const double c = mat.c1;
    const double kappa = c * c;
    const Eigen::MatrixXd m = propagator_m1(grid, c, kappa, dt);
    std::vector<double> zero(n, 0.0), r(n);
    homogeneous_step_m1(grid, c, kappa, dt, zero, r, b_a0, b_a1);
    const Eigen::VectorXd rv = Eigen::Map<const Eigen::VectorXd>(r.data(), n);
    const Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(n, n) - m;
    const Eigen::VectorXd fixed = lhs.partialPivLu().solve(rv);

    FixedPointReport rep;
    rep.residual = (lhs * fixed - rv).cwiseAbs().maxCoeff();
    std::vector<double> u(n, 0.0), next(n);
    for (int k = 0; k < max_iterations; ++k) {
        homogeneous_step_m1(grid, c, kappa, dt, u, next, b_a0, b_a1);
        double change = 0.0;
        for (int i = 0; i < n; ++i) {
            change = std::max(change, std::abs(next[i] - u[i]));
        }
        u.swap(next);
        rep.iterations = k + 1;
        if (change < tol) {
            break;
        }
    }
    for (int i = 0; i < n; ++i) {
        rep.iterate_error = std::max(rep.iterate_error, std::abs(u[i] - fixed(i)));
    }
    return rep;
}

namespace {

template <class Step>
EnvelopeReport envelope(std::vector<double> u, long steps, Step&& step) {
    EnvelopeReport rep;
    rep.initial_max = max_abs(u);
    std::vector<double> next(u.size());
    const long quarter = std::max(1L, steps / 4);
    for (long k = 1; k <= steps; ++k) {
        step(u, next);
        u.swap(next);
        const double m = max_abs(u);
        if (!std::isfinite(m)) {
            rep.diverged = true;
            rep.final_max = m;
            return rep;
        }
        if (k <= quarter) {
            rep.first_quarter_max = std::max(rep.first_quarter_max, m);
        }
        if (k > steps - quarter) {
            rep.last_quarter_max = std::max(rep.last_quarter_max, m);
        }
    }
    rep.final_max = max_abs(u);
    return rep;
}

std::vector<double> random_state(std::size_t size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> u(size);
    for (double& x : u) {
        x = dist(rng);
    }
    return u;
}

}  // namespace

EnvelopeReport homogeneous_run(const GridSpec& grid, const Material1& mat, double dt, long steps,
                               std::uint64_t seed) {
    const double c = mat.c1;
    return envelope(random_state(static_cast<std::size_t>(grid.n), seed), steps,
                    [&](const std::vector<double>& u, std::vector<double>& out) {
                        homogeneous_step_m1(grid, c, c * c, dt, u, out);
                    });
}

EnvelopeReport homogeneous_run(const GridSpec& grid, const Material2& mat, double dt, long steps,
                               std::uint64_t seed) {
    return envelope(random_state(2 * static_cast<std::size_t>(grid.n), seed), steps,
                    [&](const std::vector<double>& u, std::vector<double>& out) {
                        homogeneous_step_m2(grid, mat.mu1, mat.nu1, dt, u, out);
                    });
}

}  // namespace eos
