#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eos/grid.hpp"
#include "eos/mms_solution.hpp"

namespace eos {

struct FieldError {
    std::string field;
    double linf = 0.0;
    double l2 = 0.0;  // sqrt(dx * sum e_i^2)
};

struct ErrorReport {
    int model = 1;
    int n = 0;
    double dt = 0.0;
    double t_end = 0.0;      // time actually reached
    std::vector<FieldError> fields;    // internal nodes
    std::vector<FieldError> boundary;  // traces, sup over the run
    double runtime_s = 0.0;

    const FieldError& field(const std::string& name) const;
    /// Largest nodal L-infinity error over all fields.
    double max_linf() const;
};

struct MMSRun {
    GridSpec grid;
    double dt = 0.0;
    double t0 = 0.0;
    double t_end = 0.0;
};

ErrorReport mms_run(const MMSSolution1& exact, const Material1& mat, const MMSRun& run);
ErrorReport mms_run(const MMSSolution2& exact, const Material2& mat, const MMSRun& run);

/// p_k = log(e_k / e_{k+1}) / log(N_{k+1} / N_k) per field, using L-infinity
/// errors.  Entries are empty when either error is zero.
struct OrderRow {
    std::string field;
    std::vector<std::optional<double>> orders;
};

std::vector<OrderRow> convergence_order(const std::vector<ErrorReport>& reports);

/// Single-pair order estimate.
std::optional<double> observed_order(double e_coarse, double e_fine, double refinement = 2.0);

}  // namespace eos
