#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "eos/config.hpp"

namespace eos {

struct RunOutput {
    std::vector<std::string> files;
    std::vector<std::string> notes;  // one-line human-readable summaries
};

/// Executes the scenario in its configured mode and writes the CSV outputs
/// into `out_dir` (created when missing).  Errors propagate as ConfigError,
/// DivergenceError, QuadratureError or EigenSolverError; files written
/// before a divergence are complete up to the last finite level.
RunOutput run_scenario(const ScenarioConfig& cfg, const std::string& out_dir);

/// '#'-line payload: compact JSON of the resolved configuration.
std::string provenance(const ScenarioConfig& cfg);

/// File name of the snapshot taken at requested time t.
std::string snapshot_name(double t);

}  // namespace eos
