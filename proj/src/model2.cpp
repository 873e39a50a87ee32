#include "eos/model2.hpp"

#include <cmath>
#include <sstream>

#include "eos/errors.hpp"
#include "eos/model1.hpp"

namespace eos {

void validate(const Scenario2& sc) {
    validate(sc.mat);
    if (!(sc.dt > 0.0) || !std::isfinite(sc.dt)) {
        throw ConfigError("dt must be positive");
    }
    if (!(sc.t_end >= sc.t0)) {
        throw ConfigError("t_end must not precede t0");
    }
    const double transit = sc.grid.length() / sc.mat.c1();
    if (!(sc.dt < transit)) {
        throw ConfigError("dt must be smaller than the transit time (a1 - a0) / c1");
    }
    const BoundaryMatrices bm = boundary_matrices(sc.mat);
    if (!(bm.det0 > 0.0) || !(bm.det1 > 0.0)) {
        throw ConfigError("singular boundary matrices");
    }
    if (sc.mms || sc.source.is_zero()) {
        return;
    }
    if (sc.source.x_lo < sc.grid.a1) {
        std::ostringstream msg;
        msg << "source support starts at x = " << sc.source.x_lo << ", inside the object (a1 = " << sc.grid.a1
            << ")";
        throw ConfigError(msg.str());
    }
    if (!(std::abs(sc.source(sc.grid.a1, sc.t0)) < 1e-12)) {
        throw ConfigError("source has already reached a1 at t0");
    }
}

static Mat2 inverse(const Mat2& m, double det) {
    return {{{m[1][1] / det, -m[0][1] / det}, {-m[1][0] / det, m[0][0] / det}}};
}

BoundaryMatrices boundary_matrices(const Material2& mat) {
    const double c1 = mat.c1();
    const double c0 = mat.c0();
    BoundaryMatrices bm;
    bm.a0 = {{{c1 + c0, mat.mu1 - mat.mu0}, {mat.nu1 - mat.nu0, c1 + c0}}};
    bm.a1 = {{{c1 + c0, mat.mu0 - mat.mu1}, {mat.nu0 - mat.nu1, c1 + c0}}};
    bm.det0 = bm.a0[0][0] * bm.a0[1][1] - bm.a0[0][1] * bm.a0[1][0];
    bm.det1 = bm.a1[0][0] * bm.a1[1][1] - bm.a1[0][1] * bm.a1[1][0];
    bm.a0_inv = inverse(bm.a0, bm.det0);
    bm.a1_inv = inverse(bm.a1, bm.det1);
    return bm;
}

void interior_step_m2(const Stencils& st, const GridSpec& grid, const Material2& mat, AdvectionCoeffs2 k,
                      double dt, const State2& s, const ResidualSources2* forcing, State2& out) {
    const int n = s.size();
    std::vector<double> phi_x(n), phi_xx(n), psi_x(n), psi_xx(n), j_x(n), f(n), f_x(n);
    st.d1(s.phi, s.phi_a0, s.phi_a1, phi_x);
    st.d2(s.phi, s.phi_a0, s.phi_a1, phi_xx);
    st.d1(s.psi, s.psi_a0, s.psi_a1, psi_x);
    st.d2(s.psi, s.psi_a0, s.psi_a1, psi_xx);
    st.d1_interior(s.j, j_x);
    for (int i = 0; i < n; ++i) {
        f[i] = (mat.alpha - mat.beta * s.rho[i]) * s.phi[i] - mat.gamma * s.j[i];
    }
    st.d1_interior(f, f_x);

    out.phi.resize(n);
    out.psi.resize(n);
    out.rho.resize(n);
    out.j.resize(n);
    const double h = 0.5 * dt * dt;
    const double t_next = s.t + dt;
    for (int i = 0; i < n; ++i) {
        SourceTerms2 g0, g1;
        if (forcing) {
            g0 = (*forcing)(grid.nodes[i], s.t);
            g1 = (*forcing)(grid.nodes[i], t_next);
        }
        const double phi = s.phi[i] + dt * (k.mu * psi_x[i] + s.j[i] + g0.g1) +
                           h * (k.kappa * phi_xx[i] + f[i] + k.mu * g0.g2_x + g0.g4 + g0.g1_t);
        const double psi = s.psi[i] + dt * (k.nu * phi_x[i] + g0.g2) +
                           h * (k.kappa * psi_xx[i] + k.nu * (j_x[i] + g0.g1_x) + g0.g2_t);
        const double rho = s.rho[i] + dt * (-j_x[i] + g0.g3) + h * (-f_x[i] - g0.g4_x + g0.g3_t);
        const double jbar = s.j[i] + dt * (f[i] + g0.g4);
        const double fbar = (mat.alpha - mat.beta * rho) * phi - mat.gamma * jbar;
        out.phi[i] = phi;
        out.psi[i] = psi;
        out.rho[i] = rho;
        out.j[i] = 0.5 * (s.j[i] + jbar + dt * (fbar + g1.g4));
    }
}

void check_finite(const State2& s) {
    auto bad = [](const std::vector<double>& v) {
        for (double x : v) {
            if (!std::isfinite(x)) {
                return true;
            }
        }
        return false;
    };
    if (bad(s.phi) || bad(s.psi) || bad(s.rho) || bad(s.j) || !std::isfinite(s.phi_a0) ||
        !std::isfinite(s.psi_a0) || !std::isfinite(s.phi_a1) || !std::isfinite(s.psi_a1)) {
        throw DivergenceError(s.n, "non-finite field value at t = " + std::to_string(s.t));
    }
}

FieldPair incident_pair_m2(const Scenario2& sc, double t) {
    if (sc.mms) {
        const double c0 = sc.mat.c0();
        const double phi = sc.mms->phi.eval(sc.grid.a1, t).f;
        const double psi = sc.mms->psi.eval(sc.grid.a1, t).f;
        return {(c0 * phi + sc.mat.mu0 * psi) / (2.0 * c0), (sc.mat.nu0 * phi + c0 * psi) / (2.0 * c0)};
    }
    return incident_pair(sc.source, sc.mat, sc.grid.a1, sc.t0, t, sc.quadrature);
}

BoundaryValues2 boundary_update_m2(const DelayBuffer& j_history, const DelayBuffer& a0_history,
                                   const DelayBuffer& a1_history, const GridSpec& grid, const Material2& mat,
                                   const BoundaryMatrices& bm, double t_next, FieldPair incident,
                                   const std::function<FieldPair(double, double)>& extra) {
    const double c1 = mat.c1();
    const double c0 = mat.c0();
    const double t0 = j_history.t0();
    const int n = grid.n;
    const double half = 0.5 * grid.dx;

    FieldPair sum0, sum1;
    for (int i = 0; i < n; ++i) {
        const double x = grid.nodes[i];
        double w = grid.dx;
        if (i == 0) {
            w = grid.left_gap() + half;
        } else if (i == n - 1) {
            w = grid.right_gap() + half;
        }
        const double tl = t_next - (x - grid.a0) / c1;
        if (tl > t0) {
            FieldPair v{j_history.query(tl, static_cast<std::size_t>(i)), 0.0};
            if (extra) {
                const FieldPair g = extra(x, tl);
                v.phi += g.phi;
                v.psi += g.psi;
            }
            sum0.phi += w * v.phi;
            sum0.psi += w * v.psi;
        }
        const double tr = t_next - (grid.a1 - x) / c1;
        if (tr > t0) {
            FieldPair v{j_history.query(tr, static_cast<std::size_t>(i)), 0.0};
            if (extra) {
                const FieldPair g = extra(x, tr);
                v.phi += g.phi;
                v.psi += g.psi;
            }
            sum1.phi += w * v.phi;
            sum1.psi += w * v.psi;
        }
    }

    const Mat2 p{{{c1, mat.mu1}, {mat.nu1, c1}}};
    const Mat2 q{{{c1, -mat.mu1}, {-mat.nu1, c1}}};
    FieldPair rhs0 = apply(p, {sum0.phi / c1, sum0.psi / c1});
    FieldPair rhs1 = apply(q, {sum1.phi / c1, sum1.psi / c1});
    const double t_ret = t_next - grid.length() / c1;
    if (t_ret > t0) {
        const FieldPair u1 = apply(p, {a1_history.query(t_ret, 0), a1_history.query(t_ret, 1)});
        const FieldPair u0 = apply(q, {a0_history.query(t_ret, 0), a0_history.query(t_ret, 1)});
        rhs0.phi += u1.phi;
        rhs0.psi += u1.psi;
        rhs1.phi += u0.phi;
        rhs1.psi += u0.psi;
    }
    rhs1.phi += 2.0 * c0 * incident.phi;
    rhs1.psi += 2.0 * c0 * incident.psi;
    return {apply(bm.a0_inv, rhs0), apply(bm.a1_inv, rhs1)};
}

Trajectory2 run_m2(const Scenario2& sc) {
    validate(sc);
    const GridSpec& grid = sc.grid;
    const Stencils st(grid);
    const int n = grid.n;
    const long steps = step_count(sc.t0, sc.t_end, sc.dt);
    const BoundaryMatrices bm = boundary_matrices(sc.mat);

    std::optional<ResidualSources2> forcing;
    std::function<FieldPair(double, double)> extra;
    if (sc.mms) {
        forcing.emplace(*sc.mms, sc.mat);
        extra = [&forcing](double x, double t) {
            const SourceTerms2 g = (*forcing)(x, t);
            return FieldPair{g.g1, g.g2};
        };
    }

    State2 s(n);
    s.t = sc.t0;
    if (sc.mms) {
        for (int i = 0; i < n; ++i) {
            const double x = grid.nodes[i];
            s.phi[i] = sc.mms->phi.eval(x, sc.t0).f;
            s.psi[i] = sc.mms->psi.eval(x, sc.t0).f;
            s.rho[i] = sc.mms->rho.eval(x, sc.t0).f;
            s.j[i] = sc.mms->j.eval(x, sc.t0).f;
        }
    }

    const std::size_t cap = history_capacity(grid.length() / sc.mat.c1(), sc.dt);
    DelayBuffer j_hist(sc.t0, sc.dt, static_cast<std::size_t>(n), cap);
    DelayBuffer a0_hist(sc.t0, sc.dt, 2, cap);
    DelayBuffer a1_hist(sc.t0, sc.dt, 2, cap);
    j_hist.append(s.j);
    a0_hist.append(std::array<double, 2>{s.phi_a0, s.psi_a0});
    a1_hist.append(std::array<double, 2>{s.phi_a1, s.psi_a1});

    std::vector<long> snap_steps;
    for (double ts : sc.snapshot_times) {
        snap_steps.push_back(step_count(sc.t0, ts, sc.dt));
    }
    Trajectory2 traj;
    auto record = [&](const State2& cur) {
        traj.t.push_back(cur.t);
        traj.phi_a0.push_back(cur.phi_a0);
        traj.psi_a0.push_back(cur.psi_a0);
        traj.phi_a1.push_back(cur.phi_a1);
        traj.psi_a1.push_back(cur.psi_a1);
        if (sc.on_level) {
            sc.on_level(cur);
        }
        for (long k : snap_steps) {
            if (k == cur.n) {
                traj.snapshots.push_back(cur);
            }
        }
    };
    record(s);

    const AdvectionCoeffs2 k{sc.mat.mu1, sc.mat.nu1, sc.mat.mu1 * sc.mat.nu1};
    State2 next(n);
    for (long step = 0; step < steps; ++step) {
        interior_step_m2(st, grid, sc.mat, k, sc.dt, s, forcing ? &*forcing : nullptr, next);
        next.n = s.n + 1;
        next.t = sc.t0 + static_cast<double>(next.n) * sc.dt;
        j_hist.append(next.j);
        const FieldPair inc = incident_pair_m2(sc, next.t);
        const BoundaryValues2 b = boundary_update_m2(j_hist, a0_hist, a1_hist, grid, sc.mat, bm, next.t, inc, extra);
        next.phi_a0 = b.a0.phi;
        next.psi_a0 = b.a0.psi;
        next.phi_a1 = b.a1.phi;
        next.psi_a1 = b.a1.psi;
        a0_hist.append(std::array<double, 2>{next.phi_a0, next.psi_a0});
        a1_hist.append(std::array<double, 2>{next.phi_a1, next.psi_a1});
        check_finite(next);
        std::swap(s, next);
        record(s);
    }
    traj.final_state = s;
    return traj;
}

}  // namespace eos
