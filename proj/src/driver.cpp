#include "eos/driver.hpp"

#include <filesystem>
#include <memory>
#include <optional>

#include "eos/csv.hpp"
#include "eos/errors.hpp"
#include "eos/mms.hpp"
#include "eos/model1.hpp"
#include "eos/model2.hpp"

namespace eos {

namespace fs = std::filesystem;

std::string provenance(const ScenarioConfig& cfg) {
    return "eos " + resolved_json(cfg).dump();
}

std::string snapshot_name(double t) {
    return "snapshot_" + format_double(t) + ".csv";
}

namespace {

std::string join(const fs::path& dir, const std::string& name) {
    return (dir / name).string();
}

void run_mode(const ScenarioConfig& cfg, const fs::path& dir, RunOutput& out) {
    const GridSpec grid = make_grid(cfg);
    const double dt = cfg.dt_cfl * grid.dx / cfg.c1();
    const std::string prov = provenance(cfg);

    std::vector<long> snap_steps;
    for (double t : cfg.output.snapshot_times) {
        snap_steps.push_back(step_count(cfg.t0, t, dt));
    }
    auto write_snapshots = [&](long n, auto&& emit) {
        for (std::size_t k = 0; k < snap_steps.size(); ++k) {
            if (snap_steps[k] == n) {
                const std::string path = join(dir, snapshot_name(cfg.output.snapshot_times[k]));
                emit(path);
                out.files.push_back(path);
            }
        }
    };

    const std::string boundary_path = join(dir, "boundary.csv");
    out.files.push_back(boundary_path);
    const auto optional_row = [](std::initializer_list<std::optional<double>> v) {
        return std::vector<std::optional<double>>(v);
    };

    if (cfg.model == 1) {
        CsvWriter boundary(boundary_path, prov, {"t", "phi_a0", "phi_a1"});
        Scenario1 sc;
        sc.grid = grid;
        sc.mat = cfg.material1;
        sc.dt = dt;
        sc.t0 = cfg.t0;
        sc.t_end = cfg.t_end;
        sc.source = make_source(cfg.source);
        sc.quadrature = cfg.quadrature;
        sc.on_level = [&](const State1& s) {
            boundary.row(std::vector<double>{s.t, s.phi_a0, s.phi_a1});
            write_snapshots(s.n, [&](const std::string& path) {
                CsvWriter w(path, prov + " t=" + format_double(s.t), {"x", "phi", "rho", "j"});
                w.row(optional_row({grid.a0, s.phi_a0, std::nullopt, std::nullopt}));
                for (int i = 0; i < grid.n; ++i) {
                    w.row(std::vector<double>{grid.nodes[i], s.phi[i], s.rho[i], s.j[i]});
                }
                w.row(optional_row({grid.a1, s.phi_a1, std::nullopt, std::nullopt}));
            });
        };
        try {
            const Trajectory1 traj = run_m1(sc);
            out.notes.push_back("model 1 run: " + std::to_string(traj.t.size() - 1) + " steps, dt = " +
                                format_double(dt));
        } catch (...) {
            boundary.flush();
            throw;
        }
    } else {
        CsvWriter boundary(boundary_path, prov, {"t", "phi_a0", "phi_a1", "psi_a0", "psi_a1"});
        Scenario2 sc;
        sc.grid = grid;
        sc.mat = cfg.material2;
        sc.dt = dt;
        sc.t0 = cfg.t0;
        sc.t_end = cfg.t_end;
        sc.source = make_source(cfg.source);
        sc.quadrature = cfg.quadrature;
        sc.on_level = [&](const State2& s) {
            boundary.row(std::vector<double>{s.t, s.phi_a0, s.phi_a1, s.psi_a0, s.psi_a1});
            write_snapshots(s.n, [&](const std::string& path) {
                CsvWriter w(path, prov + " t=" + format_double(s.t), {"x", "phi", "psi", "rho", "j"});
                w.row(optional_row({grid.a0, s.phi_a0, s.psi_a0, std::nullopt, std::nullopt}));
                for (int i = 0; i < grid.n; ++i) {
                    w.row(std::vector<double>{grid.nodes[i], s.phi[i], s.psi[i], s.rho[i], s.j[i]});
                }
                w.row(optional_row({grid.a1, s.phi_a1, s.psi_a1, std::nullopt, std::nullopt}));
            });
        };
        try {
            const Trajectory2 traj = run_m2(sc);
            out.notes.push_back("model 2 run: " + std::to_string(traj.t.size() - 1) + " steps, dt = " +
                                format_double(dt));
        } catch (...) {
            boundary.flush();
            throw;
        }
    }
}

void mms_mode(const ScenarioConfig& cfg, const fs::path& dir, RunOutput& out) {
    const std::string path = join(dir, "errors.csv");
    CsvWriter w(path, provenance(cfg), {"field", "N", "dt", "linf", "l2", "order"});
    out.files.push_back(path);
    std::vector<ErrorReport> reports;
    for (int n : cfg.mms.n_list) {
        const GridSpec grid = build_grid(cfg.a0, cfg.a1, n, cfg.epsilon);
        MMSRun run{grid, cfg.dt_cfl * grid.dx / cfg.c1(), cfg.t0, cfg.t_end};
        reports.push_back(cfg.model == 1 ? mms_run(cfg.mms.solution1, cfg.material1, run)
                                         : mms_run(cfg.mms.solution2, cfg.material2, run));
    }
    auto emit = [&](const std::vector<FieldError> ErrorReport::*member) {
        const std::size_t count = (reports.front().*member).size();
        for (std::size_t f = 0; f < count; ++f) {
            for (std::size_t k = 0; k < reports.size(); ++k) {
                const FieldError& e = (reports[k].*member)[f];
                std::string order;
                if (k > 0) {
                    const double ratio = static_cast<double>(reports[k].n) / static_cast<double>(reports[k - 1].n);
                    if (const auto p = observed_order((reports[k - 1].*member)[f].linf, e.linf, ratio)) {
                        order = format_double(*p);
                    }
                }
                w.row_text({e.field, std::to_string(reports[k].n), format_double(reports[k].dt),
                            format_double(e.linf), format_double(e.l2), order});
            }
        }
    };
    emit(&ErrorReport::fields);
    emit(&ErrorReport::boundary);
    for (const auto& r : reports) {
        out.notes.push_back("N = " + std::to_string(r.n) + ": max nodal error " + format_double(r.max_linf()));
    }
}

void stability_mode(const ScenarioConfig& cfg, const fs::path& dir, RunOutput& out) {
    const std::string prov = provenance(cfg);
    const std::vector<StabilityDomain> domains =
        cfg.model == 1 ? scan_stability(cfg.material1, cfg.stability.n, cfg.stability.epsilons, cfg.stability.search,
                                        cfg.a0, cfg.a1)
                       : scan_stability(cfg.material2, cfg.stability.n, cfg.stability.epsilons, cfg.stability.search,
                                        cfg.a0, cfg.a1);
    const std::string path = join(dir, "stability.csv");
    CsvWriter w(path, prov, {"epsilon", "tau1", "tau2", "N", "model"});
    out.files.push_back(path);
    for (const auto& d : domains) {
        w.row_text({format_double(d.epsilon), d.empty ? "" : format_double(d.tau1),
                    d.empty ? "" : format_double(d.tau2), std::to_string(d.n), std::to_string(d.model)});
        out.notes.push_back("epsilon = " + format_double(d.epsilon) +
                            (d.empty ? ": no stable window"
                                     : ": (" + format_double(d.tau1) + ", " + format_double(d.tau2) + ")"));
    }
    if (cfg.stability.write_samples) {
        const std::string spath = join(dir, "stability_samples.csv");
        CsvWriter s(spath, prov, {"epsilon", "dt_over_cfl", "rho"});
        out.files.push_back(spath);
        for (const auto& d : domains) {
            for (const auto& p : d.samples) {
                s.row(std::vector<double>{d.epsilon, p.dt_over_cfl, p.rho});
            }
        }
    }
}

}  // namespace

RunOutput run_scenario(const ScenarioConfig& cfg, const std::string& out_dir) {
    const fs::path dir(out_dir.empty() ? "." : out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw ConfigError("cannot create output directory " + dir.string() + ": " + ec.message());
    }
    RunOutput out;
    switch (cfg.mode) {
        case Mode::run:
            run_mode(cfg, dir, out);
            break;
        case Mode::mms:
            mms_mode(cfg, dir, out);
            break;
        case Mode::stability:
            stability_mode(cfg, dir, out);
            break;
    }
    return out;
}

}  // namespace eos
