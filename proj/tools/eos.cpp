#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "eos/config.hpp"
#include "eos/driver.hpp"
#include "eos/errors.hpp"

namespace {

enum Exit { ok = 0, failure = 1, config_error = 2, divergence = 3, numerical = 4 };

eos::ScenarioConfig load(const std::string& path, const std::string& preset_name, eos::Mode mode) {
    nlohmann::json doc;
    std::string base = ".";
    if (!preset_name.empty()) {
        if (!path.empty()) {
            throw eos::ConfigError("give either a config file or --preset, not both");
        }
        doc = eos::preset_json(preset_name);
    } else {
        if (path.empty()) {
            throw eos::ConfigError("missing config file (or --preset NAME)");
        }
        std::ifstream in(path);
        if (!in) {
            throw eos::ConfigError("cannot open config file " + path);
        }
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw eos::ConfigError("parse error in " + path + ": " + e.what());
        }
        const auto parent = std::filesystem::path(path).parent_path();
        if (!parent.empty()) {
            base = parent.string();
        }
    }
    if (!doc.is_object()) {
        throw eos::ConfigError("config must be an object");
    }
    const std::string want = eos::to_string(mode);
    if (!doc.contains("mode")) {
        doc["mode"] = want;
    } else if (doc["mode"] != want) {
        throw eos::ConfigError("config mode is " + doc["mode"].dump() + " but the '" + want +
                               "' command was used");
    }
    return eos::parse_config_json(doc, base);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ewald-Oseen scattering solver for two 1D transient wave models"};
    app.require_subcommand(1);

    std::string config_path, preset_name, out_dir;
    auto add_mode = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("config", config_path, "JSON scenario file");
        sub->add_option("--preset", preset_name, "built-in scenario (see `eos scenarios`)");
        sub->add_option("--out", out_dir, "output directory (default: output.dir of the config)");
        return sub;
    };
    CLI::App* run_cmd = add_mode("run", "time-domain run writing snapshots and boundary traces");
    CLI::App* mms_cmd = add_mode("mms", "manufactured-solution convergence study");
    CLI::App* stab_cmd = add_mode("stability", "stability window scan over epsilon");

    std::string show;
    CLI::App* list_cmd = app.add_subcommand("scenarios", "list built-in scenarios");
    list_cmd->add_option("--show", show, "print the resolved configuration of one scenario");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : config_error;
    }

    try {
        if (list_cmd->parsed()) {
            if (!show.empty()) {
                std::cout << eos::resolved_json(eos::preset(show)).dump(2) << '\n';
                return ok;
            }
            for (const auto& name : eos::list_scenarios()) {
                std::cout << name << '\n';
            }
            return ok;
        }
        eos::Mode mode = eos::Mode::run;
        if (mms_cmd->parsed()) {
            mode = eos::Mode::mms;
        } else if (stab_cmd->parsed()) {
            mode = eos::Mode::stability;
        }
        (void)run_cmd;
        const eos::ScenarioConfig cfg = load(config_path, preset_name, mode);
        const eos::RunOutput result = eos::run_scenario(cfg, out_dir.empty() ? cfg.output.dir : out_dir);
        for (const auto& note : result.notes) {
            std::cout << note << '\n';
        }
        for (const auto& file : result.files) {
            std::cout << "wrote " << file << '\n';
        }
        return ok;
    } catch (const eos::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return config_error;
    } catch (const eos::DivergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return divergence;
    } catch (const eos::QuadratureError& e) {
        std::cerr << "quadrature error: " << e.what() << " (achieved " << e.achieved() << ")\n";
        return numerical;
    } catch (const eos::EigenSolverError& e) {
        std::cerr << "eigensolver error: " << e.what() << '\n';
        return numerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return failure;
    }
}
