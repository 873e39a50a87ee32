#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "eos/delay_buffer.hpp"
#include "eos/grid.hpp"
#include "eos/incident.hpp"
#include "eos/mms_solution.hpp"
#include "eos/source.hpp"
#include "eos/state.hpp"
#include "eos/stencils.hpp"

namespace eos {

struct Scenario1 {
    GridSpec grid;
    Material1 mat;
    double dt = 0.0;
    double t0 = 0.0;
    double t_end = 0.0;
    SourceSpec source;
    std::optional<MMSSolution1> mms;
    QuadratureOptions quadrature;
    std::vector<double> snapshot_times;
    /// Called with every time level, the initial one included.
    std::function<void(const State1&)> on_level;
};

/// Throws ConfigError when the scenario is inadmissible: non-positive dt,
/// dt not below the transit time, source support reaching into the object,
/// or a non-vanishing incident trace at t0.
void validate(const Scenario1& sc);

/// Coefficients of the Lax-Wendroff update for the phi equation.  The
/// production step uses c = c1 and kappa = c1^2; the stability lab varies
/// them independently.
struct AdvectionCoeffs1 {
    double c = 1.0;
    double kappa = 1.0;
};

/// One interior step from `s` (level n, boundary traces included) into the
/// nodal arrays of `out`.  `forcing` adds the artificial sources.  Boundary
/// traces and the time stamp of `out` are left to the caller.
void interior_step_m1(const Stencils& st, const GridSpec& grid, const Material1& mat, AdvectionCoeffs1 k,
                      double dt, const State1& s, const ResidualSources1* forcing, State1& out);

/// Throws DivergenceError when any nodal value or trace is non-finite.
void check_finite(const State1& s);

/// Incident trace at a1 (exact trace in verification mode).
double boundary_a1_m1(const Scenario1& sc, double t);

/// Discretized boundary rule at a0.  `extra`, when set, is added to the
/// history of j inside the sum (artificial source g1).
double boundary_a0_m1(const DelayBuffer& j_history, const DelayBuffer& phi_a1_history, const GridSpec& grid,
                      const Material1& mat, double t_next,
                      const std::function<double(double, double)>& extra = {});

struct Trajectory1 {
    std::vector<State1> snapshots;
    State1 final_state;
    std::vector<double> t;
    std::vector<double> phi_a0;
    std::vector<double> phi_a1;
};

/// Number of steps taken by a run: round((t_end - t0) / dt).
long step_count(double t0, double t_end, double dt);

Trajectory1 run_m1(const Scenario1& sc);

}  // namespace eos
