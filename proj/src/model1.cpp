#include "eos/model1.hpp"

#include <cmath>
#include <sstream>

#include "eos/errors.hpp"

namespace eos {

long step_count(double t0, double t_end, double dt) {
    return std::lround((t_end - t0) / dt);
}

void validate(const Scenario1& sc) {
    validate(sc.mat);
    if (!(sc.dt > 0.0) || !std::isfinite(sc.dt)) {
        throw ConfigError("dt must be positive");
    }
    if (!(sc.t_end >= sc.t0)) {
        throw ConfigError("t_end must not precede t0");
    }
    const double transit = sc.grid.length() / sc.mat.c1;
    if (!(sc.dt < transit)) {
        throw ConfigError("dt must be smaller than the transit time (a1 - a0) / c1");
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
    const double at_t0 = sc.source(sc.grid.a1, sc.t0);
    if (!(std::abs(at_t0) < 1e-12)) {
        throw ConfigError("source has already reached a1 at t0");
    }
}

void interior_step_m1(const Stencils& st, const GridSpec& grid, const Material1& mat, AdvectionCoeffs1 k,
                      double dt, const State1& s, const ResidualSources1* forcing, State1& out) {
    const int n = s.size();
    std::vector<double> phi_x(n), phi_xx(n), j_x(n), f(n), f_x(n);
    st.d1(s.phi, s.phi_a0, s.phi_a1, phi_x);
    st.d2(s.phi, s.phi_a0, s.phi_a1, phi_xx);
    st.d1_interior(s.j, j_x);
    for (int i = 0; i < n; ++i) {
        f[i] = (mat.alpha - mat.beta * s.rho[i]) * s.phi[i] - mat.gamma * s.j[i];
    }
    st.d1_interior(f, f_x);

    out.phi.resize(n);
    out.rho.resize(n);
    out.j.resize(n);
    const double h = 0.5 * dt * dt;
    const double t_next = s.t + dt;
    for (int i = 0; i < n; ++i) {
        SourceTerms1 g0, g1;
        if (forcing) {
            g0 = (*forcing)(grid.nodes[i], s.t);
            g1 = (*forcing)(grid.nodes[i], t_next);
        }
        const double phi = s.phi[i] + dt * (k.c * phi_x[i] + s.j[i] + g0.g1) +
                           h * (k.kappa * phi_xx[i] + k.c * (j_x[i] + g0.g1_x) + f[i] + g0.g3 + g0.g1_t);
        const double rho = s.rho[i] + dt * (-j_x[i] + g0.g2) + h * (-f_x[i] - g0.g3_x + g0.g2_t);
        const double jbar = s.j[i] + dt * (f[i] + g0.g3);
        const double fbar = (mat.alpha - mat.beta * rho) * phi - mat.gamma * jbar;
        out.phi[i] = phi;
        out.rho[i] = rho;
        out.j[i] = 0.5 * (s.j[i] + jbar + dt * (fbar + g1.g3));
    }
}

void check_finite(const State1& s) {
    auto bad = [](const std::vector<double>& v) {
        for (double x : v) {
            if (!std::isfinite(x)) {
                return true;
            }
        }
        return false;
    };
    if (bad(s.phi) || bad(s.rho) || bad(s.j) || !std::isfinite(s.phi_a0) || !std::isfinite(s.phi_a1)) {
        throw DivergenceError(s.n, "non-finite field value at t = " + std::to_string(s.t));
    }
}

double boundary_a1_m1(const Scenario1& sc, double t) {
    if (sc.mms) {
        return sc.mms->phi.eval(sc.grid.a1, t).f;
    }
    return phi_a1_model1(sc.source, sc.mat, sc.grid.a1, sc.t0, t, sc.quadrature);
}

double boundary_a0_m1(const DelayBuffer& j_history, const DelayBuffer& phi_a1_history, const GridSpec& grid,
                      const Material1& mat, double t_next, const std::function<double(double, double)>& extra) {
    const double t0 = j_history.t0();
    const int n = grid.n;
    const double half = 0.5 * grid.dx;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = grid.nodes[i];
        const double t_ret = t_next - (x - grid.a0) / mat.c1;
        if (t_ret <= t0) {
            continue;
        }
        double w = grid.dx;
        if (i == 0) {
            w = grid.left_gap() + half;
        } else if (i == n - 1) {
            w = grid.right_gap() + half;
        }
        double v = j_history.query(t_ret, static_cast<std::size_t>(i));
        if (extra) {
            v += extra(x, t_ret);
        }
        sum += w * v;
    }
    double value = sum / mat.c1;
    const double t_ret = t_next - grid.length() / mat.c1;
    if (t_ret > t0) {
        value += phi_a1_history.query(t_ret);
    }
    return value;
}

Trajectory1 run_m1(const Scenario1& sc) {
    validate(sc);
    const GridSpec& grid = sc.grid;
    const Stencils st(grid);
    const int n = grid.n;
    const long steps = step_count(sc.t0, sc.t_end, sc.dt);

    std::optional<ResidualSources1> forcing;
    std::function<double(double, double)> extra;
    if (sc.mms) {
        forcing.emplace(*sc.mms, sc.mat);
        extra = [&forcing](double x, double t) { return (*forcing)(x, t).g1; };
    }

    State1 s(n);
    s.t = sc.t0;
    if (sc.mms) {
        for (int i = 0; i < n; ++i) {
            const double x = grid.nodes[i];
            s.phi[i] = sc.mms->phi.eval(x, sc.t0).f;
            s.rho[i] = sc.mms->rho.eval(x, sc.t0).f;
            s.j[i] = sc.mms->j.eval(x, sc.t0).f;
        }
    }

    const std::size_t cap = history_capacity(grid.length() / sc.mat.c1, sc.dt);
    DelayBuffer j_hist(sc.t0, sc.dt, static_cast<std::size_t>(n), cap);
    DelayBuffer a1_hist(sc.t0, sc.dt, 1, cap);
    j_hist.append(s.j);
    a1_hist.append(s.phi_a1);

    std::vector<long> snap_steps;
    for (double ts : sc.snapshot_times) {
        snap_steps.push_back(step_count(sc.t0, ts, sc.dt));
    }
    Trajectory1 traj;
    traj.t.reserve(static_cast<std::size_t>(steps) + 1);
    auto record = [&](const State1& cur) {
        traj.t.push_back(cur.t);
        traj.phi_a0.push_back(cur.phi_a0);
        traj.phi_a1.push_back(cur.phi_a1);
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

    const AdvectionCoeffs1 k{sc.mat.c1, sc.mat.c1 * sc.mat.c1};
    State1 next(n);
    for (long step = 0; step < steps; ++step) {
        interior_step_m1(st, grid, sc.mat, k, sc.dt, s, forcing ? &*forcing : nullptr, next);
        next.n = s.n + 1;
        next.t = sc.t0 + static_cast<double>(next.n) * sc.dt;
        j_hist.append(next.j);
        next.phi_a1 = boundary_a1_m1(sc, next.t);
        a1_hist.append(next.phi_a1);
        next.phi_a0 = boundary_a0_m1(j_hist, a1_hist, grid, sc.mat, next.t, extra);
        check_finite(next);
        std::swap(s, next);
        record(s);
    }
    traj.final_state = s;
    return traj;
}

}  // namespace eos
