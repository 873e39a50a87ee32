#pragma once

#include <array>
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

struct Scenario2 {
    GridSpec grid;
    Material2 mat;
    double dt = 0.0;
    double t0 = 0.0;
    double t_end = 0.0;
    SourceSpec source;
    std::optional<MMSSolution2> mms;
    QuadratureOptions quadrature;
    std::vector<double> snapshot_times;
    /// Called with every time level, the initial one included.
    std::function<void(const State2&)> on_level;
};

void validate(const Scenario2& sc);

using Mat2 = std::array<std::array<double, 2>, 2>;

inline FieldPair apply(const Mat2& m, FieldPair v) {
    return {m[0][0] * v.phi + m[0][1] * v.psi, m[1][0] * v.phi + m[1][1] * v.psi};
}

/// Left-hand matrices of the two boundary rules and their inverses.
struct BoundaryMatrices {
    Mat2 a0{};
    Mat2 a1{};
    Mat2 a0_inv{};
    Mat2 a1_inv{};
    double det0 = 0.0;
    double det1 = 0.0;
};

BoundaryMatrices boundary_matrices(const Material2& mat);

struct AdvectionCoeffs2 {
    double mu = 1.0;
    double nu = 1.0;
    double kappa = 1.0;  // mu * nu in the production step
};

void interior_step_m2(const Stencils& st, const GridSpec& grid, const Material2& mat, AdvectionCoeffs2 k,
                      double dt, const State2& s, const ResidualSources2* forcing, State2& out);

void check_finite(const State2& s);

/// Incident pair at a1.  In verification mode this is the left-going part
/// of the exact trace, (1 / 2c0) [[c0, mu0], [nu0, c0]] (phi, psi)(a1, t).
FieldPair incident_pair_m2(const Scenario2& sc, double t);

struct BoundaryValues2 {
    FieldPair a0;
    FieldPair a1;
};

/// Histories: nodal j (width N), traces at a0 and a1 (width 2 each).
/// `extra`, when set, returns the artificial sources (g1, g2) added to the
/// (j, 0) integrand.
BoundaryValues2 boundary_update_m2(const DelayBuffer& j_history, const DelayBuffer& a0_history,
                                   const DelayBuffer& a1_history, const GridSpec& grid, const Material2& mat,
                                   const BoundaryMatrices& bm, double t_next, FieldPair incident,
                                   const std::function<FieldPair(double, double)>& extra = {});

struct Trajectory2 {
    std::vector<State2> snapshots;
    State2 final_state;
    std::vector<double> t;
    std::vector<double> phi_a0;
    std::vector<double> psi_a0;
    std::vector<double> phi_a1;
    std::vector<double> psi_a1;
};

Trajectory2 run_m2(const Scenario2& sc);

}  // namespace eos
