#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "eos/grid.hpp"

namespace eos {

/// One-step propagator of the homogeneous interior scheme with the current
/// decoupled (alpha = beta = gamma = 0, j = rho = 0) and zero boundary data.
struct PropagatorMatrix {
    Eigen::MatrixXd m;
    int model = 1;
    int n = 0;
    double epsilon = 1.0;
    double dt = 0.0;
};

/// Homogeneous model-1 step on phi with advection speed c and second-order
/// coefficient kappa, boundary traces b_a0 and b_a1.
void homogeneous_step_m1(const GridSpec& grid, double c, double kappa, double dt, std::span<const double> phi,
                         std::span<double> out, double b_a0 = 0.0, double b_a1 = 0.0);

/// Homogeneous model-2 step on the stacked vector (phi, psi).
void homogeneous_step_m2(const GridSpec& grid, double mu, double nu, double dt, std::span<const double> u,
                         std::span<double> out);

PropagatorMatrix assemble_propagator(const GridSpec& grid, const Material1& mat, double dt);
PropagatorMatrix assemble_propagator(const GridSpec& grid, const Material2& mat, double dt);

/// Model-1 propagator with independent speed and second-order coefficient.
Eigen::MatrixXd propagator_m1(const GridSpec& grid, double c, double kappa, double dt);

/// Spectral radius of a model-2 propagator.  When the blocks have the form
/// [[A, mu B], [nu B, A]] the spectrum is that of A + c B and A - c B
/// (c = sqrt(mu nu)); otherwise the full matrix is solved.
double spectral_radius_m2(const Eigen::MatrixXd& m2, double mu, double nu);

struct StabilitySearch {
    double dt_max_factor = 1.5;  // scan up to this multiple of dx / c1
    int scan_points = 64;
    double bisect_tol = 1e-4;
    double margin = 1e-9;  // stable iff rho < 1 - margin
};

struct StabilitySample {
    double dt_over_cfl = 0.0;
    double rho = 0.0;
};

/// Stable window tau1 dx/c1 < dt < tau2 dx/c1.  A window that reaches the
/// smallest scanned step has tau1 = 0.
struct StabilityDomain {
    int model = 1;
    int n = 0;
    double epsilon = 1.0;
    bool empty = true;
    double tau1 = 0.0;
    double tau2 = 0.0;
    std::vector<StabilitySample> samples;
};

/// Spectral radius at dt = tau dx / c1.
double radius_at(const GridSpec& grid, const Material1& mat, double tau);
double radius_at(const GridSpec& grid, const Material2& mat, double tau);

StabilityDomain stability_bounds(const GridSpec& grid, const Material1& mat, const StabilitySearch& search = {});
StabilityDomain stability_bounds(const GridSpec& grid, const Material2& mat, const StabilitySearch& search = {});

/// Bounds for each epsilon on the production interval of the grid.
std::vector<StabilityDomain> scan_stability(const Material1& mat, int n, const std::vector<double>& epsilons,
                                            const StabilitySearch& search = {}, double a0 = 0.0, double a1 = 3.0);
std::vector<StabilityDomain> scan_stability(const Material2& mat, int n, const std::vector<double>& epsilons,
                                            const StabilitySearch& search = {}, double a0 = 0.0, double a1 = 3.0);

/// Worker count for parallel scans: EOS_THREADS when set, else hardware.
unsigned scan_threads();

struct DecompositionReport {
    Eigen::MatrixXd m1;
    Eigen::MatrixXd m2;
    double affinity_error = 0.0;         // M(mid) vs mean of M(ca), M(cb)
    double block_error = 0.0;            // M2 vs [[m1, mu m2], [nu m2, m1]]
    double block_error_minus = 0.0;      // M2 vs [[m1, mu m2], [-nu m2, m1]]
    double m2_interior_diagonal = 0.0;   // max |m2(i,i)|, 0 < i < N-1
};

/// Splits M1(c) = m1 + c m2 at fixed kappa = mu1 nu1 and compares the
/// assembled model-2 propagator with the block form.
DecompositionReport decomposition_check(const GridSpec& grid, const Material2& mat, double dt);

struct FixedPointReport {
    double iterate_error = 0.0;  // max |U_K - U*|
    double residual = 0.0;       // max |(I - M) U* - r|
    int iterations = 0;
};

/// Iterates the homogeneous model-1 step with constant boundary data and
/// compares the limit with (I - M)^{-1} r, r the boundary contribution.
FixedPointReport fixed_point_check(const GridSpec& grid, const Material1& mat, double dt, double b_a0, double b_a1,
                                   int max_iterations = 200000, double tol = 1e-13);

struct EnvelopeReport {
    double first_quarter_max = 0.0;
    double last_quarter_max = 0.0;
    double initial_max = 0.0;
    double final_max = 0.0;
    bool diverged = false;

    double envelope_ratio() const { return last_quarter_max / first_quarter_max; }
    double growth() const { return final_max / initial_max; }
};

/// Runs the homogeneous solver step from uniform random data in [-1, 1].
EnvelopeReport homogeneous_run(const GridSpec& grid, const Material1& mat, double dt, long steps,
                               std::uint64_t seed);
EnvelopeReport homogeneous_run(const GridSpec& grid, const Material2& mat, double dt, long steps,
                               std::uint64_t seed);

}  // namespace eos
