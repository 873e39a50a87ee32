#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <random>

#include "eos/spectral.hpp"
#include "eos/stability.hpp"

using namespace eos;

namespace {

const Material1 kMat1{2.0, 1.0, -1.0, 0.3, 8.0};
const Material2 kMat2{2.0, 2.0, 1.0, 1.0, -1.0, 0.3, 8.0};

Eigen::VectorXd random_vector(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) {
        v(i) = u(rng);
    }
    return v;
}

StabilitySearch quick() {
    StabilitySearch s;
    s.scan_points = 32;
    return s;
}

}  // namespace

TEST_CASE("spectral radius of small reference matrices") {
    CHECK(spectral_radius(Eigen::MatrixXd::Identity(5, 5)) == doctest::Approx(1.0).epsilon(1e-14));
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2, 2);
    d(0, 0) = 0.5;
    d(1, 1) = -0.9;
    CHECK(spectral_radius(d) == doctest::Approx(0.9).epsilon(1e-14));
    Eigen::MatrixXd fib(2, 2);
    fib << 1, 1, 1, 0;
    CHECK(spectral_radius(fib) == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-14));
    // full upper triangle goes through the balanced dense path
    Eigen::MatrixXd up(3, 3);
    up << 0.2, 5.0, -7.0, 0.0, -0.7, 3.0, 0.0, 0.0, 0.4;
    CHECK_FALSE(is_tridiagonal(up));
    CHECK(spectral_radius(up) == doctest::Approx(0.7).epsilon(1e-12));
    Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(2, 2);
    bad(0, 1) = std::nan("");
    CHECK_THROWS_AS((void)spectral_radius(bad), std::runtime_error);
}

TEST_CASE("tridiagonal symmetrization preserves the spectrum") {
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(6, 6);
    for (int i = 0; i < 6; ++i) {
        t(i, i) = 0.1 * i - 0.2;
        if (i + 1 < 6) {
            t(i, i + 1) = 0.3 + 0.05 * i;
            t(i + 1, i) = 0.6 - 0.04 * i;
        }
    }
    const Eigen::MatrixXd s = symmetrize_tridiagonal(t);
    CHECK((s - s.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(spectral_radius(t) == doctest::Approx(spectral_radius_direct(t)).epsilon(1e-12));
    CHECK(spectral_radius(s) == doctest::Approx(spectral_radius_direct(t)).epsilon(1e-12));
}

TEST_CASE("probe-assembled matrix reproduces the solver step") {
    const GridSpec g = build_grid(0.0, 3.0, 60, 1.0);
    const double dt = 0.4 * g.dx / kMat1.c1;
    const Eigen::MatrixXd m1 = assemble_propagator(g, kMat1, dt).m;
    const Eigen::MatrixXd m2 = assemble_propagator(g, kMat2, dt).m;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Eigen::VectorXd v = random_vector(g.n, seed);
        Eigen::VectorXd out(g.n);
        homogeneous_step_m1(g, kMat1.c1, kMat1.c1 * kMat1.c1, dt, {v.data(), static_cast<std::size_t>(g.n)},
                            {out.data(), static_cast<std::size_t>(g.n)});
        CHECK((m1 * v - out).norm() / out.norm() < 1e-13);

        const Eigen::VectorXd w = random_vector(2 * g.n, seed + 100);
        Eigen::VectorXd out2(2 * g.n);
        homogeneous_step_m2(g, kMat2.mu1, kMat2.nu1, dt, {w.data(), static_cast<std::size_t>(2 * g.n)},
                            {out2.data(), static_cast<std::size_t>(2 * g.n)});
        CHECK((m2 * w - out2).norm() / out2.norm() < 1e-13);
    }
    std::vector<double> zero(g.n, 0.0), out(g.n, 1.0);
    homogeneous_step_m1(g, 2.0, 4.0, dt, zero, out);
    for (double v : out) {
        CHECK(v == 0.0);
    }
}

TEST_CASE("uniform grid propagator is the Lax-Wendroff band") {
    const GridSpec g = build_grid(0.0, 1.0, 4, 0.0);
    const double c = 2.0, dt = 0.03;
    const double nu = c * dt / g.dx;
    const Eigen::MatrixXd m = propagator_m1(g, c, c * c, dt);
    CHECK(is_tridiagonal(m));
    for (int i = 0; i < 4; ++i) {
        CHECK(m(i, i) == doctest::Approx(1.0 - nu * nu).epsilon(1e-13));
        if (i + 1 < 4) {
            CHECK(m(i, i + 1) == doctest::Approx(0.5 * nu + 0.5 * nu * nu).epsilon(1e-13));
            CHECK(m(i + 1, i) == doctest::Approx(-0.5 * nu + 0.5 * nu * nu).epsilon(1e-13));
        }
    }
}

TEST_CASE("model-2 propagator splits into model-1 blocks") {
    for (double eps : {0.0, 0.5, 1.0}) {
        const GridSpec g = build_grid(0.0, 3.0, 40, eps);
        const DecompositionReport r = decomposition_check(g, kMat2, 0.4 * g.dx / kMat2.c1());
        CHECK(r.affinity_error < 1e-12);
        CHECK(r.block_error < 1e-12);
        CHECK(r.m2_interior_diagonal == 0.0);
        // the coupling block enters with a plus sign in both corners
        CHECK(r.block_error_minus > 1e-3);
    }
}

TEST_CASE("constant boundary data converge to the fixed point") {
    const GridSpec g = build_grid(0.0, 3.0, 30, 1.0);
    const FixedPointReport r = fixed_point_check(g, kMat1, 0.4 * g.dx / kMat1.c1, 0.7, -0.3);
    CHECK(r.residual < 1e-12);
    CHECK(r.iterate_error < 1e-9);
    CHECK(r.iterations < 200000);
}

TEST_CASE("stability window on the production grid family") {
    const GridSpec g = build_grid(0.0, 3.0, 100, 1.0);
    const StabilityDomain d1 = stability_bounds(g, kMat1, quick());
    const StabilityDomain d2 = stability_bounds(g, kMat2, quick());
    REQUIRE_FALSE(d1.empty);
    CHECK(d1.tau1 > 0.0);
    CHECK(d1.tau1 < 0.4);
    CHECK(d1.tau2 > 0.4);
    CHECK(d1.samples.size() == 32);
    CHECK(d2.tau1 == doctest::Approx(d1.tau1).epsilon(1e-3));
    CHECK(d2.tau2 == doctest::Approx(d1.tau2).epsilon(1e-3));
    CHECK(radius_at(g, kMat1, 0.5 * (d1.tau1 + d1.tau2)) < 1.0);
    CHECK(radius_at(g, kMat1, 1.2 * d1.tau2) > 1.0);

    const GridSpec u = build_grid(0.0, 3.0, 100, 0.0);
    const StabilityDomain d0 = stability_bounds(u, kMat1, quick());
    REQUIRE_FALSE(d0.empty);
    CHECK(d0.tau1 <= d1.tau1);
    CHECK(d0.tau2 >= d1.tau2);
}

TEST_CASE("window drifts little with resolution") {
    const StabilityDomain coarse = stability_bounds(build_grid(0.0, 3.0, 100, 1.0), kMat1, quick());
    const StabilityDomain fine = stability_bounds(build_grid(0.0, 3.0, 400, 1.0), kMat1, quick());
    CHECK(std::abs(fine.tau1 - coarse.tau1) < 0.05);
    CHECK(std::abs(fine.tau2 - coarse.tau2) < 0.05);
}

TEST_CASE("scan over epsilon and empty windows") {
    const auto doms = scan_stability(kMat1, 60, {1.0, 0.0}, quick());
    REQUIRE(doms.size() == 2);
    CHECK(doms[0].epsilon == 1.0);
    CHECK(doms[1].epsilon == 0.0);
    CHECK(doms[0].n == 60);

    StabilitySearch narrow = quick();
    narrow.dt_max_factor = 0.2;  // every scanned step lies below tau1 at epsilon = 1
    const StabilityDomain none = stability_bounds(build_grid(0.0, 3.0, 60, 1.0), kMat1, narrow);
    CHECK(none.empty);

    StabilitySearch bad;
    bad.scan_points = 8;
    CHECK_THROWS_AS((void)stability_bounds(build_grid(0.0, 3.0, 60, 1.0), kMat1, bad), std::invalid_argument);
}

TEST_CASE("homogeneous runs agree with the spectral verdict") {
    const GridSpec g = build_grid(0.0, 3.0, 100, 1.0);
    const double cfl = g.dx / kMat1.c1;
    const EnvelopeReport stable = homogeneous_run(g, kMat1, 0.55 * cfl, 2000, 5);
    CHECK_FALSE(stable.diverged);
    CHECK(stable.envelope_ratio() <= 1.0 + 1e-6);
    const EnvelopeReport unstable = homogeneous_run(g, kMat1, 1.1 * cfl, 2000, 5);
    CHECK((unstable.diverged || unstable.growth() > 10.0));
    const EnvelopeReport stable2 = homogeneous_run(g, kMat2, 0.55 * cfl, 2000, 5);
    CHECK(stable2.envelope_ratio() <= 1.0 + 1e-6);
}

TEST_CASE("runs just inside and just outside the window") {
    const GridSpec g = build_grid(0.0, 3.0, 100, 1.0);
    const StabilityDomain d = stability_bounds(g, kMat1, quick());
    REQUIRE_FALSE(d.empty);
    const double cfl = g.dx / kMat1.c1;
    const long steps = 10L * g.n;
    for (double tau : {1.05 * d.tau1, 0.98 * d.tau2}) {
        const EnvelopeReport r = homogeneous_run(g, kMat1, tau * cfl, steps, 3);
        INFO("tau = " << tau);
        CHECK_FALSE(r.diverged);
        CHECK(r.growth() <= 1.0);
    }
    for (double tau : {0.95 * d.tau1, 1.02 * d.tau2}) {
        const EnvelopeReport r = homogeneous_run(g, kMat1, tau * cfl, steps, 3);
        INFO("tau = " << tau << " growth " << r.growth());
        CHECK((r.diverged || r.growth() > 10.0));
    }
}

TEST_CASE("worker count honours EOS_THREADS") {
    setenv("EOS_THREADS", "3", 1);
    CHECK(scan_threads() == 3);
    setenv("EOS_THREADS", "junk", 1);
    CHECK(scan_threads() >= 1);
    unsetenv("EOS_THREADS");
}
