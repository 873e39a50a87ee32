#include "eos/mms.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "eos/model1.hpp"
#include "eos/model2.hpp"

namespace eos {

const FieldError& ErrorReport::field(const std::string& name) const {
    for (const auto& f : fields) {
        if (f.field == name) {
            return f;
        }
    }
    throw std::out_of_range("no error entry for field " + name);
}

double ErrorReport::max_linf() const {
    double m = 0.0;
    for (const auto& f : fields) {
        m = std::max(m, f.linf);
    }
    return m;
}

namespace {

template <class Exact>
FieldError nodal_error(const std::string& name, const std::vector<double>& values, const GridSpec& grid,
                       const Exact& exact, double t) {
    FieldError e{name, 0.0, 0.0};
    double sq = 0.0;
    for (int i = 0; i < grid.n; ++i) {
        const double d = std::abs(values[i] - exact.eval(grid.nodes[i], t).f);
        e.linf = std::max(e.linf, d);
        sq += d * d;
    }
    e.l2 = std::sqrt(grid.dx * sq);
    return e;
}

template <class Exact>
FieldError trace_error(const std::string& name, const std::vector<double>& ts, const std::vector<double>& values,
                       const Exact& exact, double x) {
    FieldError e{name, 0.0, 0.0};
    double sq = 0.0;
    for (std::size_t k = 0; k < ts.size(); ++k) {
        const double d = std::abs(values[k] - exact.eval(x, ts[k]).f);
        e.linf = std::max(e.linf, d);
        sq += d * d;
    }
    const double dt = ts.size() > 1 ? ts[1] - ts[0] : 0.0;
    e.l2 = std::sqrt(dt * sq);
    return e;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

ErrorReport mms_run(const MMSSolution1& exact, const Material1& mat, const MMSRun& run) {
    const auto start = std::chrono::steady_clock::now();
    Scenario1 sc;
    sc.grid = run.grid;
    sc.mat = mat;
    sc.dt = run.dt;
    sc.t0 = run.t0;
    sc.t_end = run.t_end;
    sc.mms = exact;
    const Trajectory1 traj = run_m1(sc);
    const State1& s = traj.final_state;

    ErrorReport r;
    r.model = 1;
    r.n = run.grid.n;
    r.dt = run.dt;
    r.t_end = s.t;
    r.fields.push_back(nodal_error("phi", s.phi, run.grid, exact.phi, s.t));
    r.fields.push_back(nodal_error("rho", s.rho, run.grid, exact.rho, s.t));
    r.fields.push_back(nodal_error("j", s.j, run.grid, exact.j, s.t));
    r.boundary.push_back(trace_error("phi_a0", traj.t, traj.phi_a0, exact.phi, run.grid.a0));
    r.boundary.push_back(trace_error("phi_a1", traj.t, traj.phi_a1, exact.phi, run.grid.a1));
    r.runtime_s = seconds_since(start);
    return r;
}

ErrorReport mms_run(const MMSSolution2& exact, const Material2& mat, const MMSRun& run) {
    const auto start = std::chrono::steady_clock::now();
    Scenario2 sc;
    sc.grid = run.grid;
    sc.mat = mat;
    sc.dt = run.dt;
    sc.t0 = run.t0;
    sc.t_end = run.t_end;
    sc.mms = exact;
    const Trajectory2 traj = run_m2(sc);
    const State2& s = traj.final_state;

    ErrorReport r;
    r.model = 2;
    r.n = run.grid.n;
    r.dt = run.dt;
    r.t_end = s.t;
    r.fields.push_back(nodal_error("phi", s.phi, run.grid, exact.phi, s.t));
    r.fields.push_back(nodal_error("psi", s.psi, run.grid, exact.psi, s.t));
    r.fields.push_back(nodal_error("rho", s.rho, run.grid, exact.rho, s.t));
    r.fields.push_back(nodal_error("j", s.j, run.grid, exact.j, s.t));
    r.boundary.push_back(trace_error("phi_a0", traj.t, traj.phi_a0, exact.phi, run.grid.a0));
    r.boundary.push_back(trace_error("psi_a0", traj.t, traj.psi_a0, exact.psi, run.grid.a0));
    r.boundary.push_back(trace_error("phi_a1", traj.t, traj.phi_a1, exact.phi, run.grid.a1));
    r.boundary.push_back(trace_error("psi_a1", traj.t, traj.psi_a1, exact.psi, run.grid.a1));
    r.runtime_s = seconds_since(start);
    return r;
}

std::optional<double> observed_order(double e_coarse, double e_fine, double refinement) {
    if (!(e_coarse > 0.0) || !(e_fine > 0.0) || !(refinement > 1.0)) {
        return std::nullopt;
    }
    return std::log(e_coarse / e_fine) / std::log(refinement);
}

std::vector<OrderRow> convergence_order(const std::vector<ErrorReport>& reports) {
    if (reports.size() < 2) {
        throw std::invalid_argument("convergence_order needs at least two reports");
    }
    std::vector<OrderRow> rows;
    for (const auto& f : reports.front().fields) {
        OrderRow row{f.field, {}};
        for (std::size_t k = 0; k + 1 < reports.size(); ++k) {
            const double ratio = static_cast<double>(reports[k + 1].n) / static_cast<double>(reports[k].n);
            row.orders.push_back(
                observed_order(reports[k].field(f.field).linf, reports[k + 1].field(f.field).linf, ratio));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace eos
