#include "nwp/commands.hpp"

#include "nwp/classical.hpp"
#include "nwp/operators.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

namespace nwp {

namespace {

// Fixed 17-significant-digit formatting so reruns are byte-identical.
std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void emit_operator_line(std::ostream& out, const char* name, const OperatorSpec& op) {
    out << "# " << name << ": c_pp=" << g17(op.c_pp) << " c_p=" << g17(op.c_p)
        << " c_x=" << g17(op.c_x) << " c_xx=" << g17(op.c_xx) << " c_0=" << g17(op.c_0)
        << "\n";
}

} // namespace

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
    validate_scenario(cfg.scenario);
    validate_evolution(cfg.evolution);
    const Grid1D grid = cfg.make_grid_checked();
    const Window win = cfg.effective_window(grid);
    const std::size_t steps = cfg.total_steps();

    WaveField f = initial_state(cfg.scenario, grid, cfg.evolution);
    double tracked = mode_position(f);
    double prev_d = trajectory_d(cfg.scenario, 0.0);

    out << "t,x_mode,d_analytic,norm_window,boundary_flag\n";

    auto emit_row = [&](const WaveField& field, double t) {
        const double d = trajectory_d(cfg.scenario, t);
        tracked = mode_position_near(field, tracked + (d - prev_d));
        prev_d = d;
        const bool flagged =
            boundary_fraction(field, cfg.evolution.boundary_margin) > 1e-6;
        out << g17(t) << ',' << g17(tracked) << ',' << g17(d) << ','
            << g17(l2_norm(field, win)) << ',' << (flagged ? 1 : 0) << "\n";
    };

    emit_row(f, 0.0);
    std::size_t done = 0;
    while (done < steps) {
        EvolutionConfig chunk = cfg.evolution;
        chunk.steps = std::min(cfg.sample_every, steps - done);
        f = split_step_evolve(f, cfg.scenario, chunk);
        done += chunk.steps;
        emit_row(f, static_cast<double>(done) * cfg.evolution.dt);
    }
    return kOk;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
    validate_scenario(cfg.scenario);
    validate_evolution(cfg.evolution);
    const Grid1D grid = cfg.make_grid_checked();
    const Window win = cfg.effective_window(grid);

    out << "t,e_tilde,eigen_residual\n";
    emit_operator_line(out, "H", full_hamiltonian(cfg.scenario, 0.0));
    emit_operator_line(out, "H_tilde(0)", h_tilde(cfg.scenario, 0.0));
    emit_operator_line(out, "H_c(0)", h_c(cfg.scenario, 0.0));

    const double stride = cfg.evolution.dt * static_cast<double>(cfg.sample_every);
    for (std::size_t j = 0;; ++j) {
        const double t = static_cast<double>(j) * stride;
        if (t > cfg.t_end * (1.0 + 1e-12)) break;
        out << g17(t) << ',' << g17(e_tilde(cfg.scenario, t)) << ','
            << g17(eigen_residual(cfg.scenario, t, grid, win)) << "\n";
    }
    return kOk;
}

int cmd_classical(const RunConfig& cfg, std::ostream& out) {
    validate_scenario(cfg.scenario);
    validate_evolution(cfg.evolution);
    const double x0 = trajectory_d(cfg.scenario, 0.0);
    const double p0 = cfg.scenario.m * trajectory_d_dot(cfg.scenario, 0.0);
    const TrajectoryRecord rec =
        integrate_hc(cfg.scenario, x0, p0, cfg.t_end, cfg.evolution.dt);

    out << "t,x_classical,p_classical,d_analytic\n";
    for (std::size_t i = 0; i < rec.points.size(); i += cfg.sample_every) {
        const auto& pt = rec.points[i];
        out << g17(pt.t) << ',' << g17(pt.x) << ',' << g17(pt.p) << ','
            << g17(rec.d_analytic[i]) << "\n";
    }
    return kOk;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
    validate_scenario(cfg.scenario);
    validate_evolution(cfg.evolution);
    const Grid1D grid = cfg.make_grid_checked();
    const std::size_t samples = cfg.total_steps() / cfg.sample_every + 1;
    const CompareResult res = compare_classical_quantum(
        cfg.scenario, grid, cfg.evolution, cfg.t_end, std::max<std::size_t>(samples, 2));

    out << "t,x_classical,p_classical,d_analytic,x_mode_quantum\n";
    for (const auto& row : res.rows) {
        out << g17(row.t) << ',' << g17(row.x_classical) << ',' << g17(row.p_classical)
            << ',' << g17(row.d_analytic) << ',' << g17(row.x_mode_quantum) << "\n";
    }
    out << "# " << (res.classical_pass ? "PASS" : "FAIL")
        << " classical_vs_analytic max_err=" << g17(res.max_classical_err)
        << " tol=" << g17(res.tol_classical) << "\n";
    out << "# " << (res.quantum_pass ? "PASS" : "FAIL")
        << " quantum_mode_vs_analytic max_err=" << g17(res.max_quantum_err)
        << " tol=" << g17(res.tol_quantum) << "\n";
    return (res.classical_pass && res.quantum_pass) ? kOk : kAcceptanceFailure;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"nonspreading wave packet laboratory"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    int (*handler)(const RunConfig&, std::ostream&) = nullptr;

    for (const auto& [name, desc, fn] :
         {std::tuple{"simulate", "split-operator evolution with mode tracking", &cmd_simulate},
          std::tuple{"decompose", "operator decomposition diagnostics", &cmd_decompose},
          std::tuple{"classical", "Hamilton dynamics under the effective Hamiltonian",
                     &cmd_classical},
          std::tuple{"compare", "classical trajectory versus quantum packet", &cmd_compare}}) {
        auto* sub = app.add_subcommand(name, desc);
        sub->add_option("--config", config_path, "JSON run configuration")->required();
        sub->add_option("--out", out_path, "output CSV path (overrides output_path)");
        sub->callback([fn, &handler] { handler = fn; });
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        RunConfig cfg = load_run_config(config_path);
        if (!out_path.empty()) cfg.output_path = out_path;

        std::ofstream file;
        std::ostream* sink = &out;
        if (!cfg.output_path.empty()) {
            file.open(cfg.output_path, std::ios::binary);
            if (!file) {
                err << "error: cannot open output file \"" << cfg.output_path << "\"\n";
                return kInvariantError;
            }
            sink = &file;
        }
        return handler(cfg, *sink);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        err << "invariant violation: " << e.what() << "\n";
        return kInvariantError;
    } catch (const std::domain_error& e) {
        err << "invariant violation: " << e.what() << "\n";
        return kInvariantError;
    }
}

} // namespace nwp
