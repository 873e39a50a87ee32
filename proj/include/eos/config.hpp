#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "eos/grid.hpp"
#include "eos/incident.hpp"
#include "eos/mms_solution.hpp"
#include "eos/source.hpp"
#include "eos/stability.hpp"

namespace eos {

enum class Mode { run, mms, stability };

std::string to_string(Mode m);

struct SourceConfig {
    std::string kind = "none";  // none | gaussian | tabulated
    GaussianSource gaussian;
    bool explicit_support = false;
    double x_lo = 0.0;
    double x_hi = 0.0;
    std::string path;  // tabulated CSV, resolved against the config directory
};

struct MMSConfig {
    std::vector<int> n_list{100, 200, 400};
    MMSSolution1 solution1 = MMSSolution1::figure_family();
    MMSSolution2 solution2 = MMSSolution2::figure_family();
};

struct StabilityConfig {
    std::vector<double> epsilons{0.0, 0.25, 0.5, 0.75, 1.0};
    int n = 200;
    StabilitySearch search;
    bool write_samples = true;
};

struct OutputConfig {
    std::string dir = ".";
    std::vector<double> snapshot_times;
};

struct ScenarioConfig {
    std::string name;
    int model = 1;
    Mode mode = Mode::run;
    double a0 = 0.0;
    double a1 = 3.0;
    int n = 1600;
    double epsilon = 1.0;
    Material1 material1;
    Material2 material2;
    double dt_cfl = 0.4;  // dt in units of dx / c1
    double t0 = 0.0;
    double t_end = 1.0;
    SourceConfig source;
    MMSConfig mms;
    StabilityConfig stability;
    OutputConfig output;
    QuadratureOptions quadrature;

    double c1() const { return model == 1 ? material1.c1 : material2.c1(); }
};

/// Reads and validates a JSON scenario file.  Throws ConfigError naming the
/// offending key on malformed input, unknown keys, or violated invariants.
ScenarioConfig parse_config(const std::string& path);
ScenarioConfig parse_config_json(const nlohmann::json& doc, const std::string& base_dir = ".");

/// Fully resolved configuration, defaults included.  The output directory
/// is omitted so that results do not depend on where they are written.
nlohmann::json resolved_json(const ScenarioConfig& cfg);

/// Built-in scenarios.
std::vector<std::string> list_scenarios();
nlohmann::json preset_json(const std::string& name);
ScenarioConfig preset(const std::string& name);

SourceSpec make_source(const SourceConfig& sc);
GridSpec make_grid(const ScenarioConfig& cfg);

}  // namespace eos
