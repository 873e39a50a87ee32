#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "eos/config.hpp"
#include "eos/csv.hpp"
#include "eos/driver.hpp"
#include "eos/errors.hpp"

using namespace eos;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("eos_test_cli_" + std::to_string(::getpid())) / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int cli(const std::string& args) {
    const std::string cmd = std::string(EOS_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

json small_run() {
    json doc = preset_json("fig2-run-m1");
    doc["grid"]["N"] = 60;
    doc["t_end"] = 1.0;
    doc["output"]["snapshot_times"] = {0.5, 1.0};
    return doc;
}

fs::path write_json(const fs::path& dir, const json& doc) {
    const fs::path p = dir / "scenario.json";
    std::ofstream(p) << doc.dump(2);
    return p;
}

std::string config_error(const json& doc) {
    try {
        (void)parse_config_json(doc);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("built-in scenarios") {
    const auto names = list_scenarios();
    CHECK(names.size() == 6);
    for (const auto& n : names) {
        CHECK_NOTHROW((void)preset(n));
    }
    const ScenarioConfig f2 = preset("fig2-run-m1");
    CHECK(f2.model == 1);
    CHECK(f2.n == 1600);
    CHECK(f2.source.gaussian.amplitude == 5.0);
    CHECK(f2.source.gaussian.alpha1 == 36.0);
    CHECK(f2.source.gaussian.t_center == 0.5);
    CHECK(f2.source.gaussian.beta1 == 4.0);
    CHECK(f2.material1.c1 == 2.0);
    CHECK(f2.material1.c0 == 1.0);
    CHECK(f2.t_end == 4.0);
    const ScenarioConfig f3 = preset("fig3-mms-m2");
    CHECK(f3.material2.mu1 == 2.0);
    CHECK(f3.material2.nu1 == 2.0);
    CHECK(f3.material2.mu0 == 1.0);
    CHECK(f3.material2.nu0 == 1.0);
    CHECK(f3.mode == Mode::mms);
    CHECK_THROWS_AS((void)preset("fig9"), ConfigError);
}

TEST_CASE("configuration errors name the offending key") {
    json doc = small_run();
    doc["grid"]["N"] = 3;
    CHECK(config_error(doc).find("N must be >= 4") != std::string::npos);

    doc = small_run();
    doc["grid"]["spacing"] = 0.1;
    CHECK(config_error(doc).find("grid.spacing") != std::string::npos);

    doc = small_run();
    doc["t_end"] = "long";
    CHECK(config_error(doc).find("t_end") != std::string::npos);

    doc = small_run();
    doc["source"]["x_lo"] = 2.0;
    CHECK_FALSE(config_error(doc).empty());

    doc = small_run();
    doc["grid"]["epsilon"] = 0.5;
    CHECK(config_error(doc).empty());
    const ScenarioConfig cfg = parse_config_json(doc);
    const GridSpec g = make_grid(cfg);
    CHECK(g.dx == doctest::Approx(60.5 / (60.0 * 61.0) * 3.0).epsilon(1e-15));
}

TEST_CASE("tabulated source resolves relative to the config file") {
    json doc = small_run();
    doc["source"] = {{"kind", "tabulated"}, {"path", "bilinear_source.csv"}};
    const ScenarioConfig cfg = parse_config_json(doc, EOS_TEST_DATA_DIR);
    const SourceSpec s = make_source(cfg.source);
    CHECK(s.x_lo == 3.5);
    CHECK(s(4.0, 1.0) == doctest::Approx(0.5 + 0.125 + 0.125 + 0.25));
}

TEST_CASE("shortest round-trip formatting") {
    for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) {
        CHECK(std::stod(format_double(v)) == v);
    }
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("null-source run writes exact zeros") {
    const fs::path dir = scratch("null");
    json doc = small_run();
    doc["source"] = {{"kind", "none"}};
    const RunOutput out = run_scenario(parse_config_json(doc), dir.string());
    CHECK(out.files.size() == 3);
    std::ifstream in(dir / "boundary.csv");
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind("# eos ", 0) == 0);
    std::getline(in, line);
    CHECK(line == "t,phi_a0,phi_a1");
    int rows = 0;
    while (std::getline(in, line)) {
        const auto first = line.find(',');
        CHECK(line.substr(first + 1) == "0,0");
        ++rows;
    }
    CHECK(rows > 10);

    std::ifstream snap(dir / snapshot_name(1.0));
    std::getline(snap, line);
    CHECK(line.find(" t=") != std::string::npos);
    std::getline(snap, line);
    CHECK(line == "x,phi,rho,j");
    std::getline(snap, line);
    CHECK(line == "0,0,,");
}

TEST_CASE("model-2 run headers and mms error table") {
    const fs::path dir = scratch("m2");
    json doc = preset_json("fig4-run-m2");
    doc["grid"]["N"] = 40;
    doc["t_end"] = 0.5;
    doc["output"]["snapshot_times"] = {0.5};
    (void)run_scenario(parse_config_json(doc), dir.string());
    const std::string b = slurp(dir / "boundary.csv");
    CHECK(b.find("\nt,phi_a0,phi_a1,psi_a0,psi_a1\n") != std::string::npos);
    CHECK(b.find('\r') == std::string::npos);

    json mms = preset_json("fig1-mms-m1");
    mms["mms"]["N"] = {40, 80};
    mms["t_end"] = 0.5;
    (void)run_scenario(parse_config_json(mms), dir.string());
    std::ifstream in(dir / "errors.csv");
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    CHECK(line == "field,N,dt,linf,l2,order");
    std::getline(in, line);
    CHECK(line.rfind("phi,40,", 0) == 0);
    CHECK(line.back() == ',');
}

TEST_CASE("cli exit codes") {
    const fs::path dir = scratch("exit");
    CHECK(cli("scenarios") == 0);
    CHECK(cli("scenarios --show fig2-run-m1") == 0);
    CHECK(cli("") == 2);
    CHECK(cli("run --bogus") == 2);
    CHECK(cli("run " + (dir / "missing.json").string()) == 2);

    std::ofstream(dir / "broken.json") << "{ \"model\": 1, ";
    CHECK(cli("run " + (dir / "broken.json").string()) == 2);

    json doc = small_run();
    CHECK(cli("mms " + write_json(dir, doc).string()) == 2);
    doc["grid"]["N"] = 3;
    CHECK(cli("run " + write_json(dir, doc).string()) == 2);

    doc = small_run();
    doc["t_end"] = 60.0;
    doc["dt_cfl"] = 3.0;
    doc["output"] = {{"dir", (dir / "div").string()}};
    CHECK(cli("run " + write_json(dir, doc).string()) == 3);

    doc = small_run();
    doc["quadrature"] = {{"rel_tol", 1e-300}, {"abs_floor", 0.0}, {"max_level", 6}};
    CHECK(cli("run " + write_json(dir, doc).string() + " --out " + (dir / "q").string()) == 4);

    doc = small_run();
    CHECK(cli("run " + write_json(dir, doc).string() + " --out " + (dir / "ok").string()) == 0);
    CHECK(fs::exists(dir / "ok" / "boundary.csv"));
}

TEST_CASE("repeated runs are byte-identical") {
    const fs::path dir = scratch("det");
    const fs::path cfg = write_json(dir, small_run());
    REQUIRE(cli("run " + cfg.string() + " --out " + (dir / "a").string()) == 0);
    REQUIRE(cli("run " + cfg.string() + " --out " + (dir / "b").string()) == 0);
    int files = 0;
    for (const auto& e : fs::directory_iterator(dir / "a")) {
        CHECK(slurp(e.path()) == slurp(dir / "b" / e.path().filename()));
        ++files;
    }
    CHECK(files == 3);
}
