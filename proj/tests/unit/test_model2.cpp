#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "eos/errors.hpp"
#include "eos/model2.hpp"
#include "oracles.hpp"

using namespace eos;

namespace {

const Material2 kMat{2.0, 2.0, 1.0, 1.0, -1.0, 0.3, 8.0};
const GaussianSource kRunM2Source{1.0, 4.0, 36.0, 1.0, 4.0};

Scenario2 production(const Material2& mat, int n, double tau, double t_end) {
    Scenario2 sc;
    sc.grid = build_grid(0.0, 3.0, n, 1.0);
    sc.mat = mat;
    sc.dt = tau * sc.grid.dx / mat.c1();
    sc.t_end = t_end;
    sc.source = SourceSpec::gaussian(kRunM2Source);
    return sc;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

// incident phi at a1 for unit c0 and the clipped support [3, 5]
double incident_phi(double t) {
    if (t <= 0.0) {
        return 0.0;
    }
    return oracle::gaussian_characteristic_integral(1.0, 4.0, 36.0, 1.0, 4.0, 3.0, 1.0, t, 3.0,
                                                    std::min(5.0, 3.0 + t)) /
           2.0;
}

}  // namespace

TEST_CASE("boundary matrices and their inverses") {
    const BoundaryMatrices bm = boundary_matrices(kMat);
    CHECK(bm.det0 == doctest::Approx(8.0));
    CHECK(bm.det1 == doctest::Approx(8.0));
    for (const auto& [a, inv] : {std::pair{bm.a0, bm.a0_inv}, std::pair{bm.a1, bm.a1_inv}}) {
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                const double v = a[r][0] * inv[0][c] + a[r][1] * inv[1][c];
                CHECK(v == doctest::Approx(r == c ? 1.0 : 0.0).epsilon(1e-14));
            }
        }
    }
}

TEST_CASE("a1 solve with quiet histories returns the scaled incident pair") {
    const Material2 m{2.0, 2.0, 0.5, 2.0, 0, 0, 0};
    const GridSpec g = build_grid(0.0, 3.0, 10, 1.0);
    const BoundaryMatrices bm = boundary_matrices(m);
    DelayBuffer j(0.0, 0.05, g.n), a0(0.0, 0.05, 2), a1(0.0, 0.05, 2);
    for (int k = 0; k < 4; ++k) {
        j.append(std::vector<double>(g.n, 0.0));
        a0.append(std::vector<double>{0.0, 0.0});
        a1.append(std::vector<double>{0.0, 0.0});
    }
    const double c0 = m.c0();
    const FieldPair inc{1.0, m.nu0 / c0};
    const BoundaryValues2 b = boundary_update_m2(j, a0, a1, g, m, bm, 0.15, inc);
    // Cramer's rule on A1 x = 2 c0 inc
    const double c1 = m.c1();
    const double a = c1 + c0, bb = m.mu0 - m.mu1, c = m.nu0 - m.nu1, d = c1 + c0;
    const double r0 = 2.0 * c0 * inc.phi, r1 = 2.0 * c0 * inc.psi;
    const double det = a * d - bb * c;
    CHECK(b.a1.phi == doctest::Approx((r0 * d - bb * r1) / det).epsilon(1e-14));
    CHECK(b.a1.psi == doctest::Approx((a * r1 - c * r0) / det).epsilon(1e-14));
    CHECK(b.a0.phi == 0.0);
    CHECK(b.a0.psi == 0.0);
    const BoundaryValues2 z = boundary_update_m2(j, a0, a1, g, m, bm, 0.15, {});
    CHECK(z.a1.phi == 0.0);
    CHECK(z.a1.psi == 0.0);
}

TEST_CASE("zero state maps to zero and quadratics advance exactly") {
    for (double eps : {0.0, 1.0}) {
        const GridSpec g = build_grid(0.0, 3.0, 14, eps);
        const Stencils st(g);
        const double dt = 0.01;
        State2 s(g.n), out(g.n);
        interior_step_m2(st, g, kMat, {2.0, 2.0, 4.0}, dt, s, nullptr, out);
        CHECK(max_abs(out.phi) == 0.0);
        CHECK(max_abs(out.psi) == 0.0);
        CHECK(max_abs(out.rho) == 0.0);
        CHECK(max_abs(out.j) == 0.0);

        const Material2 free{2.0, 3.0, 1.0, 1.0, 0.0, 0.0, 0.0};
        for (int i = 0; i < g.n; ++i) {
            s.phi[i] = g.nodes[i] * g.nodes[i];
            s.psi[i] = 2.0 * g.nodes[i] * g.nodes[i];
        }
        s.phi_a0 = 0.0;
        s.psi_a0 = 0.0;
        s.phi_a1 = 9.0;
        s.psi_a1 = 18.0;
        interior_step_m2(st, g, free, {2.0, 3.0, 6.0}, dt, s, nullptr, out);
        for (int i = 0; i < g.n; ++i) {
            const double x = g.nodes[i];
            const double h = 0.5 * dt * dt;
            CHECK(out.phi[i] == doctest::Approx(x * x + dt * 2.0 * 4.0 * x + h * 6.0 * 2.0).epsilon(1e-13));
            CHECK(out.psi[i] == doctest::Approx(2 * x * x + dt * 3.0 * 2.0 * x + h * 6.0 * 4.0).epsilon(1e-13));
        }
    }
}

TEST_CASE("impedance-matched object is transparent") {
    const Material2 matched{1.0, 1.0, 1.0, 1.0, 0.0, 0.3, 8.0};
    auto interior_error = [&](int n, double& reflection, double& peak) {
        Scenario2 sc = production(matched, n, 0.4, 4.0);
        const Trajectory2 tr = run_m2(sc);
        reflection = 0.0;
        for (std::size_t k = 0; k < tr.t.size(); ++k) {
            reflection = std::max(reflection, std::abs(tr.phi_a1[k] - tr.psi_a1[k]) / 2.0);
        }
        const State2& s = tr.final_state;
        double e = 0.0;
        peak = 0.0;
        for (int i = 0; i < n; ++i) {
            const double ref = incident_phi(s.t + (sc.grid.nodes[i] - 3.0));
            e = std::max(e, std::abs(s.phi[i] - ref));
            e = std::max(e, std::abs(s.psi[i] - ref));
            peak = std::max(peak, std::abs(ref));
        }
        CHECK(max_abs(s.j) == 0.0);
        CHECK(max_abs(s.rho) == 0.0);
        return e;
    };
    double r1, r2, p1, p2;
    const double e1 = interior_error(200, r1, p1);
    const double e2 = interior_error(400, r2, p2);
    CHECK(p1 > 0.1);
    CHECK(e1 / p1 < 1e-2);
    CHECK(std::log2(e1 / e2) > 1.8);
    CHECK(r1 < 1e-14 * p1);
    CHECK(r2 < 1e-14 * p2);
}

TEST_CASE("null source leaves every field exactly zero") {
    Scenario2 sc = production(kMat, 100, 0.4, 2.0);
    sc.source = SourceSpec::none();
    const Trajectory2 tr = run_m2(sc);
    CHECK(max_abs(tr.final_state.phi) == 0.0);
    CHECK(max_abs(tr.final_state.psi) == 0.0);
    CHECK(max_abs(tr.final_state.rho) == 0.0);
    CHECK(max_abs(tr.final_state.j) == 0.0);
    CHECK(max_abs(tr.phi_a0) == 0.0);
    CHECK(max_abs(tr.psi_a1) == 0.0);
}

TEST_CASE("incident pair in production and verification modes") {
    Scenario2 sc = production(kMat, 50, 0.4, 1.0);
    const FieldPair p = incident_pair_m2(sc, 2.0);
    CHECK(oracle::rel_err(p.phi, incident_phi(2.0)) < 1e-8);
    CHECK(p.psi == doctest::Approx(p.phi).epsilon(1e-14));
    CHECK(incident_pair_m2(sc, 0.0).phi == 0.0);

    sc.mms = MMSSolution2::figure_family();
    const double t = 1.3;
    const double phi = sc.mms->phi.eval(3.0, t).f;
    const double psi = sc.mms->psi.eval(3.0, t).f;
    const FieldPair v = incident_pair_m2(sc, t);
    CHECK(v.phi == doctest::Approx((phi + psi) / 2.0).epsilon(1e-14));
    CHECK(v.psi == doctest::Approx((phi + psi) / 2.0).epsilon(1e-14));
}

TEST_CASE("unstable step raises a divergence error") {
    Scenario2 sc = production(kMat, 100, 3.0, 60.0);
    CHECK_THROWS_AS((void)run_m2(sc), DivergenceError);
}

TEST_CASE("scenario validation") {
    Scenario2 ok = production(kMat, 50, 0.4, 1.0);
    CHECK_NOTHROW(validate(ok));
    Scenario2 s = ok;
    s.source = SourceSpec::gaussian(kRunM2Source, 2.9, 5.0);
    CHECK_THROWS_AS(validate(s), ConfigError);
    s = ok;
    s.dt = -0.1;
    CHECK_THROWS_AS(validate(s), ConfigError);
}
