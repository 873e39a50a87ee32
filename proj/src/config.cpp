#include "eos/config.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "eos/errors.hpp"
#include "eos/model1.hpp"
#include "eos/model2.hpp"

namespace eos {

using nlohmann::json;

std::string to_string(Mode m) {
    switch (m) {
        case Mode::run:
            return "run";
        case Mode::mms:
            return "mms";
        case Mode::stability:
            return "stability";
    }
    return "run";
}

namespace {

class ObjectReader {
public:
    ObjectReader(const json& j, std::string where) : j_(j), where_(std::move(where)) {
        if (!j_.is_object()) {
            throw ConfigError(label() + " must be an object");
        }
    }

    bool has(const std::string& key) const { return j_.contains(key); }

    double number(const std::string& key, double fallback) {
        seen_.insert(key);
        if (!j_.contains(key)) {
            return fallback;
        }
        const json& v = j_.at(key);
        if (!v.is_number()) {
            throw ConfigError(path(key) + " must be a number");
        }
        return v.get<double>();
    }

    int integer(const std::string& key, int fallback) {
        seen_.insert(key);
        if (!j_.contains(key)) {
            return fallback;
        }
        const json& v = j_.at(key);
        if (!v.is_number_integer()) {
            throw ConfigError(path(key) + " must be an integer");
        }
        return v.get<int>();
    }

    bool boolean(const std::string& key, bool fallback) {
        seen_.insert(key);
        if (!j_.contains(key)) {
            return fallback;
        }
        const json& v = j_.at(key);
        if (!v.is_boolean()) {
            throw ConfigError(path(key) + " must be true or false");
        }
        return v.get<bool>();
    }

    std::string text(const std::string& key, const std::string& fallback) {
        seen_.insert(key);
        if (!j_.contains(key)) {
            return fallback;
        }
        const json& v = j_.at(key);
        if (!v.is_string()) {
            throw ConfigError(path(key) + " must be a string");
        }
        return v.get<std::string>();
    }

    std::vector<double> numbers(const std::string& key, const std::vector<double>& fallback) {
        seen_.insert(key);
        if (!j_.contains(key)) {
            return fallback;
        }
        const json& v = j_.at(key);
        if (!v.is_array()) {
            throw ConfigError(path(key) + " must be an array of numbers");
        }
        std::vector<double> out;
        for (const auto& e : v) {
            if (!e.is_number()) {
                throw ConfigError(path(key) + " must be an array of numbers");
            }
            out.push_back(e.get<double>());
        }
        return out;
    }

    std::vector<int> integers(const std::string& key, const std::vector<int>& fallback) {
        seen_.insert(key);
        if (!j_.contains(key)) {
            return fallback;
        }
        const json& v = j_.at(key);
        if (!v.is_array()) {
            throw ConfigError(path(key) + " must be an array of integers");
        }
        std::vector<int> out;
        for (const auto& e : v) {
            if (!e.is_number_integer()) {
                throw ConfigError(path(key) + " must be an array of integers");
            }
            out.push_back(e.get<int>());
        }
        return out;
    }

    const json* child(const std::string& key) {
        seen_.insert(key);
        return j_.contains(key) ? &j_.at(key) : nullptr;
    }

    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it) {
            if (!seen_.count(it.key())) {
                throw ConfigError("unknown key '" + path(it.key()) + "'");
            }
        }
    }

    std::string path(const std::string& key) const { return where_.empty() ? key : where_ + "." + key; }

private:
    std::string label() const { return where_.empty() ? "config" : where_; }

    const json& j_;
    std::string where_;
    std::set<std::string> seen_;
};

ArctanGaussian read_arctan(const json* j, const std::string& where, ArctanGaussian d) {
    if (!j) {
        return d;
    }
    ObjectReader r(*j, where);
    d.amplitude = r.number("amplitude", d.amplitude);
    d.b = r.number("b", d.b);
    d.alpha = r.number("alpha", d.alpha);
    d.beta = r.number("beta", d.beta);
    d.x_o = r.number("x_o", d.x_o);
    d.t_s = r.number("t_s", d.t_s);
    r.finish();
    return d;
}

Gaussian2D read_gaussian2d(const json* j, const std::string& where, Gaussian2D d) {
    if (!j) {
        return d;
    }
    ObjectReader r(*j, where);
    d.amplitude = r.number("amplitude", d.amplitude);
    d.x_c = r.number("x_c", d.x_c);
    d.t_c = r.number("t_c", d.t_c);
    d.delta_x = r.number("delta_x", d.delta_x);
    d.delta_t = r.number("delta_t", d.delta_t);
    r.finish();
    if (!(d.delta_x > 0.0) || !(d.delta_t > 0.0)) {
        throw ConfigError(where + ": delta_x and delta_t must be positive");
    }
    return d;
}

json arctan_json(const ArctanGaussian& a) {
    return {{"amplitude", a.amplitude}, {"b", a.b},     {"alpha", a.alpha},
            {"beta", a.beta},           {"x_o", a.x_o}, {"t_s", a.t_s}};
}

json gaussian2d_json(const Gaussian2D& g) {
    return {{"amplitude", g.amplitude},
            {"x_c", g.x_c},
            {"t_c", g.t_c},
            {"delta_x", g.delta_x},
            {"delta_t", g.delta_t}};
}

void require(bool ok, const std::string& msg) {
    if (!ok) {
        throw ConfigError(msg);
    }
}

void check_physical(const ScenarioConfig& cfg) {
    if (cfg.mode != Mode::run) {
        return;
    }
    const GridSpec grid = make_grid(cfg);
    const double dt = cfg.dt_cfl * grid.dx / cfg.c1();
    const SourceSpec src = make_source(cfg.source);
    if (cfg.model == 1) {
        Scenario1 sc;
        sc.grid = grid;
        sc.mat = cfg.material1;
        sc.dt = dt;
        sc.t0 = cfg.t0;
        sc.t_end = cfg.t_end;
        sc.source = src;
        validate(sc);
    } else {
        Scenario2 sc;
        sc.grid = grid;
        sc.mat = cfg.material2;
        sc.dt = dt;
        sc.t0 = cfg.t0;
        sc.t_end = cfg.t_end;
        sc.source = src;
        validate(sc);
    }
}

}  // namespace

GridSpec make_grid(const ScenarioConfig& cfg) {
    return build_grid(cfg.a0, cfg.a1, cfg.n, cfg.epsilon);
}

SourceSpec make_source(const SourceConfig& sc) {
    if (sc.kind == "none") {
        return SourceSpec::none();
    }
    if (sc.kind == "gaussian") {
        return sc.explicit_support ? SourceSpec::gaussian(sc.gaussian, sc.x_lo, sc.x_hi)
                                   : SourceSpec::gaussian(sc.gaussian);
    }
    try {
        return SourceSpec::tabulated(TabulatedSource::load_csv(sc.path));
    } catch (const std::exception& e) {
        throw ConfigError(std::string("source.path: ") + e.what());
    }
}

ScenarioConfig parse_config_json(const json& doc, const std::string& base_dir) {
    ScenarioConfig cfg;
    ObjectReader top(doc, "");
    cfg.name = top.text("name", "");
    cfg.model = top.integer("model", 1);
    require(cfg.model == 1 || cfg.model == 2, "model must be 1 or 2");
    const std::string mode = top.text("mode", "run");
    if (mode == "run") {
        cfg.mode = Mode::run;
    } else if (mode == "mms") {
        cfg.mode = Mode::mms;
    } else if (mode == "stability") {
        cfg.mode = Mode::stability;
    } else {
        throw ConfigError("mode must be one of run, mms, stability (got '" + mode + "')");
    }

    if (const json* g = top.child("grid")) {
        ObjectReader r(*g, "grid");
        cfg.a0 = r.number("a0", cfg.a0);
        cfg.a1 = r.number("a1", cfg.a1);
        cfg.n = r.integer("N", cfg.n);
        cfg.epsilon = r.number("epsilon", cfg.epsilon);
        r.finish();
    }
    require(cfg.a0 < cfg.a1, "grid.a0 must be smaller than grid.a1");
    require(cfg.n >= 4, "N must be >= 4 (grid.N = " + std::to_string(cfg.n) + ")");
    require(cfg.epsilon >= 0.0 && cfg.epsilon <= 1.0, "grid.epsilon must lie in [0, 1]");

    if (const json* m = top.child("material")) {
        ObjectReader r(*m, "material");
        if (cfg.model == 1) {
            cfg.material1.c1 = r.number("c1", cfg.material1.c1);
            cfg.material1.c0 = r.number("c0", cfg.material1.c0);
            cfg.material1.alpha = r.number("alpha", cfg.material1.alpha);
            cfg.material1.beta = r.number("beta", cfg.material1.beta);
            cfg.material1.gamma = r.number("gamma", cfg.material1.gamma);
        } else {
            cfg.material2.mu1 = r.number("mu1", cfg.material2.mu1);
            cfg.material2.nu1 = r.number("nu1", cfg.material2.nu1);
            cfg.material2.mu0 = r.number("mu0", cfg.material2.mu0);
            cfg.material2.nu0 = r.number("nu0", cfg.material2.nu0);
            cfg.material2.alpha = r.number("alpha", cfg.material2.alpha);
            cfg.material2.beta = r.number("beta", cfg.material2.beta);
            cfg.material2.gamma = r.number("gamma", cfg.material2.gamma);
        }
        r.finish();
    }
    try {
        if (cfg.model == 1) {
            validate(cfg.material1);
        } else {
            validate(cfg.material2);
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("material: ") + e.what());
    }

    cfg.dt_cfl = top.number("dt_cfl", cfg.dt_cfl);
    require(cfg.dt_cfl > 0.0, "dt_cfl must be positive");
    cfg.t0 = top.number("t0", cfg.t0);
    cfg.t_end = top.number("t_end", cfg.mode == Mode::mms ? 2.0 : cfg.t_end);
    require(cfg.t_end >= cfg.t0, "t_end must not precede t0");

    if (const json* s = top.child("source")) {
        ObjectReader r(*s, "source");
        cfg.source.kind = r.text("kind", "gaussian");
        if (cfg.source.kind == "gaussian") {
            GaussianSource& g = cfg.source.gaussian;
            g.amplitude = r.number("amplitude", g.amplitude);
            g.x_center = r.number("x_center", g.x_center);
            g.alpha1 = r.number("alpha1", g.alpha1);
            g.t_center = r.number("t_center", g.t_center);
            g.beta1 = r.number("beta1", g.beta1);
            require(g.alpha1 > 0.0, "source.alpha1 must be positive");
            require(g.beta1 >= 0.0, "source.beta1 must be non-negative");
            const double half = 6.0 / std::sqrt(g.alpha1);
            cfg.source.explicit_support = r.has("x_lo") || r.has("x_hi");
            cfg.source.x_lo = r.number("x_lo", g.x_center - half);
            cfg.source.x_hi = r.number("x_hi", g.x_center + half);
            require(cfg.source.x_lo < cfg.source.x_hi, "source.x_lo must be smaller than source.x_hi");
        } else if (cfg.source.kind == "tabulated") {
            const std::string p = r.text("path", "");
            require(!p.empty(), "source.path is required for tabulated sources");
            std::filesystem::path fp(p);
            if (fp.is_relative()) {
                fp = std::filesystem::path(base_dir) / fp;
            }
            cfg.source.path = fp.lexically_normal().string();
        } else if (cfg.source.kind != "none") {
            throw ConfigError("source.kind must be one of none, gaussian, tabulated (got '" + cfg.source.kind +
                              "')");
        }
        r.finish();
    }

    if (const json* m = top.child("mms")) {
        ObjectReader r(*m, "mms");
        cfg.mms.n_list = r.integers("N", cfg.mms.n_list);
        if (const json* sol = r.child("solution")) {
            ObjectReader s(*sol, "mms.solution");
            if (cfg.model == 1) {
                cfg.mms.solution1.phi = read_arctan(s.child("phi"), "mms.solution.phi", cfg.mms.solution1.phi);
                cfg.mms.solution1.j = read_gaussian2d(s.child("j"), "mms.solution.j", cfg.mms.solution1.j);
                cfg.mms.solution1.rho = read_gaussian2d(s.child("rho"), "mms.solution.rho", cfg.mms.solution1.rho);
            } else {
                cfg.mms.solution2.phi = read_arctan(s.child("phi"), "mms.solution.phi", cfg.mms.solution2.phi);
                cfg.mms.solution2.psi = read_arctan(s.child("psi"), "mms.solution.psi", cfg.mms.solution2.psi);
                cfg.mms.solution2.j = read_gaussian2d(s.child("j"), "mms.solution.j", cfg.mms.solution2.j);
                cfg.mms.solution2.rho = read_gaussian2d(s.child("rho"), "mms.solution.rho", cfg.mms.solution2.rho);
            }
            s.finish();
        }
        r.finish();
        require(!cfg.mms.n_list.empty(), "mms.N must not be empty");
        for (int n : cfg.mms.n_list) {
            require(n >= 4, "N must be >= 4 (mms.N entry " + std::to_string(n) + ")");
        }
    }

    if (const json* s = top.child("stability")) {
        ObjectReader r(*s, "stability");
        cfg.stability.epsilons = r.numbers("epsilons", cfg.stability.epsilons);
        cfg.stability.n = r.integer("N", cfg.stability.n);
        cfg.stability.search.dt_max_factor = r.number("dt_max_factor", cfg.stability.search.dt_max_factor);
        cfg.stability.search.scan_points = r.integer("scan_points", cfg.stability.search.scan_points);
        cfg.stability.search.bisect_tol = r.number("bisect_tol", cfg.stability.search.bisect_tol);
        cfg.stability.search.margin = r.number("margin", cfg.stability.search.margin);
        cfg.stability.write_samples = r.boolean("samples", cfg.stability.write_samples);
        r.finish();
        require(cfg.stability.n >= 4, "N must be >= 4 (stability.N = " + std::to_string(cfg.stability.n) + ")");
        require(cfg.stability.search.scan_points >= 16, "stability.scan_points must be >= 16");
        require(cfg.stability.search.dt_max_factor > 0.0, "stability.dt_max_factor must be positive");
        require(cfg.stability.search.bisect_tol > 0.0, "stability.bisect_tol must be positive");
        require(cfg.stability.search.margin >= 0.0, "stability.margin must be non-negative");
        require(!cfg.stability.epsilons.empty(), "stability.epsilons must not be empty");
        for (double e : cfg.stability.epsilons) {
            require(e >= 0.0 && e <= 1.0, "stability.epsilons entries must lie in [0, 1]");
        }
    }

    if (const json* o = top.child("output")) {
        ObjectReader r(*o, "output");
        cfg.output.dir = r.text("dir", cfg.output.dir);
        cfg.output.snapshot_times = r.numbers("snapshot_times", cfg.output.snapshot_times);
        r.finish();
    }
    for (double t : cfg.output.snapshot_times) {
        require(t >= cfg.t0 && t <= cfg.t_end, "output.snapshot_times entries must lie in [t0, t_end]");
    }

    if (const json* q = top.child("quadrature")) {
        ObjectReader r(*q, "quadrature");
        cfg.quadrature.rel_tol = r.number("rel_tol", cfg.quadrature.rel_tol);
        cfg.quadrature.abs_floor = r.number("abs_floor", cfg.quadrature.abs_floor);
        cfg.quadrature.max_level = r.integer("max_level", cfg.quadrature.max_level);
        r.finish();
        require(cfg.quadrature.rel_tol > 0.0, "quadrature.rel_tol must be positive");
        require(cfg.quadrature.max_level >= cfg.quadrature.min_level, "quadrature.max_level too small");
    }
    top.finish();

    check_physical(cfg);
    return cfg;
}

ScenarioConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path);
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("parse error in " + path + ": " + e.what());
    }
    const std::string base = std::filesystem::path(path).parent_path().string();
    return parse_config_json(doc, base.empty() ? "." : base);
}

json resolved_json(const ScenarioConfig& cfg) {
    json j;
    j["name"] = cfg.name;
    j["model"] = cfg.model;
    j["mode"] = to_string(cfg.mode);
    j["grid"] = {{"a0", cfg.a0}, {"a1", cfg.a1}, {"N", cfg.n}, {"epsilon", cfg.epsilon}};
    if (cfg.model == 1) {
        const Material1& m = cfg.material1;
        j["material"] = {{"c1", m.c1}, {"c0", m.c0}, {"alpha", m.alpha}, {"beta", m.beta}, {"gamma", m.gamma}};
    } else {
        const Material2& m = cfg.material2;
        j["material"] = {{"mu1", m.mu1},     {"nu1", m.nu1},   {"mu0", m.mu0},    {"nu0", m.nu0},
                         {"alpha", m.alpha}, {"beta", m.beta}, {"gamma", m.gamma}};
    }
    j["dt_cfl"] = cfg.dt_cfl;
    j["t0"] = cfg.t0;
    j["t_end"] = cfg.t_end;
    switch (cfg.mode) {
        case Mode::run: {
            json s{{"kind", cfg.source.kind}};
            if (cfg.source.kind == "gaussian") {
                const GaussianSource& g = cfg.source.gaussian;
                s.update({{"amplitude", g.amplitude},
                          {"x_center", g.x_center},
                          {"alpha1", g.alpha1},
                          {"t_center", g.t_center},
                          {"beta1", g.beta1},
                          {"x_lo", cfg.source.x_lo},
                          {"x_hi", cfg.source.x_hi}});
            } else if (cfg.source.kind == "tabulated") {
                s["path"] = cfg.source.path;
            }
            j["source"] = s;
            j["quadrature"] = {{"rel_tol", cfg.quadrature.rel_tol},
                               {"abs_floor", cfg.quadrature.abs_floor},
                               {"max_level", cfg.quadrature.max_level}};
            j["output"] = {{"snapshot_times", cfg.output.snapshot_times}};
            break;
        }
        case Mode::mms: {
            json sol;
            if (cfg.model == 1) {
                sol = {{"phi", arctan_json(cfg.mms.solution1.phi)},
                       {"j", gaussian2d_json(cfg.mms.solution1.j)},
                       {"rho", gaussian2d_json(cfg.mms.solution1.rho)}};
            } else {
                sol = {{"phi", arctan_json(cfg.mms.solution2.phi)},
                       {"psi", arctan_json(cfg.mms.solution2.psi)},
                       {"j", gaussian2d_json(cfg.mms.solution2.j)},
                       {"rho", gaussian2d_json(cfg.mms.solution2.rho)}};
            }
            j["mms"] = {{"N", cfg.mms.n_list}, {"solution", sol}};
            break;
        }
        case Mode::stability: {
            const StabilitySearch& s = cfg.stability.search;
            j["stability"] = {{"epsilons", cfg.stability.epsilons}, {"N", cfg.stability.n},
                              {"dt_max_factor", s.dt_max_factor},   {"scan_points", s.scan_points},
                              {"bisect_tol", s.bisect_tol},         {"margin", s.margin},
                              {"samples", cfg.stability.write_samples}};
            break;
        }
    }
    return j;
}

std::vector<std::string> list_scenarios() {
    return {"fig1-mms-m1", "fig2-run-m1", "fig3-mms-m2", "fig4-run-m2", "stability-m1", "stability-m2"};
}

json preset_json(const std::string& name) {
    const json grid{{"a0", 0.0}, {"a1", 3.0}, {"N", 1600}, {"epsilon", 1.0}};
    const json mat1{{"c1", 2.0}, {"c0", 1.0}, {"alpha", -1.0}, {"beta", 0.3}, {"gamma", 8.0}};
    const json mat2{{"mu1", 2.0},     {"nu1", 2.0},  {"mu0", 1.0},  {"nu0", 1.0},
                    {"alpha", -1.0}, {"beta", 0.3}, {"gamma", 8.0}};
    if (name == "fig1-mms-m1") {
        return {{"name", name},      {"model", 1},     {"mode", "mms"},
                {"grid", grid},      {"material", mat1}, {"dt_cfl", 0.4},
                {"t_end", 2.0},      {"mms", {{"N", {100, 200, 400, 1600}}}}};
    }
    if (name == "fig2-run-m1") {
        return {{"name", name},
                {"model", 1},
                {"mode", "run"},
                {"grid", grid},
                {"material", mat1},
                {"dt_cfl", 0.4},
                {"t_end", 4.0},
                {"source",
                 {{"kind", "gaussian"},
                  {"amplitude", 5.0},
                  {"x_center", 4.0},
                  {"alpha1", 36.0},
                  {"t_center", 0.5},
                  {"beta1", 4.0}}},
                {"output", {{"snapshot_times", {1.0, 2.0, 3.0, 4.0}}}}};
    }
    if (name == "fig3-mms-m2") {
        return {{"name", name},      {"model", 2},     {"mode", "mms"},
                {"grid", grid},      {"material", mat2}, {"dt_cfl", 0.4},
                {"t_end", 2.0},      {"mms", {{"N", {100, 200, 400, 1600}}}}};
    }
    if (name == "fig4-run-m2") {
        return {{"name", name},
                {"model", 2},
                {"mode", "run"},
                {"grid", grid},
                {"material", mat2},
                {"dt_cfl", 0.4},
                {"t_end", 5.0},
                {"source",
                 {{"kind", "gaussian"},
                  {"amplitude", 1.0},
                  {"x_center", 4.0},
                  {"alpha1", 36.0},
                  {"t_center", 1.0},
                  {"beta1", 4.0}}},
                {"output", {{"snapshot_times", {1.0, 2.0, 3.0, 4.0, 5.0}}}}};
    }
    if (name == "stability-m1" || name == "stability-m2") {
        const bool two = name == "stability-m2";
        return {{"name", name},
                {"model", two ? 2 : 1},
                {"mode", "stability"},
                {"grid", grid},
                {"material", two ? mat2 : mat1},
                {"stability", {{"epsilons", {0.0, 0.25, 0.5, 0.75, 1.0}}, {"N", 200}}}};
    }
    throw ConfigError("unknown scenario '" + name + "'");
}

ScenarioConfig preset(const std::string& name) {
    return parse_config_json(preset_json(name));
}

}  // namespace eos
