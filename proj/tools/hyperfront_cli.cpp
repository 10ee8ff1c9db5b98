// Command-line front end: closed-form speeds, shooting, simulation, estimation,
// table reproduction and sweeps. Everything is written as CSV.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "hyperfront/experiment.hpp"

namespace hf = hyperfront;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

// Long flags that map one-to-one onto config keys.
struct SettingFlag {
    const char* name;
    const char* help;
};

const std::vector<SettingFlag> kSettingFlags = {
    {"family", "reaction family: cubic or pwl"},
    {"alpha", "unstable zero alpha in (0,1)"},
    {"alphas", "alpha list, \"a,b,c\" or start:stop:step"},
    {"tau", "relaxation time tau"},
    {"sigma", "reaction memory sigma, 0 <= sigma <= tau"},
    {"a", "diffusivity"},
    {"kappa", "cubic amplitude"},
    {"m", "piecewise-affine slope"},
    {"scheme", "first-order, lienard or kinetic (comma list for estimate)"},
    {"dx", "mesh width"},
    {"dt", "time step"},
    {"L", "domain length"},
    {"T", "final time"},
    {"theta", "scout & spot level (default alpha)"},
    {"p", "scout & spot gap in steps (default T/(2 dt))"},
    {"ly-begin", "LeVeque-Yee window start (default T/2)"},
    {"ly-end", "LeVeque-Yee window end (default T)"},
    {"frame-stride", "steps between recorded frames (default 0.1/dt)"},
    {"du", "shooting step in phi"},
    {"epsilon", "shooting launch offset"},
    {"bracket-margin", "relative margin inside the sub-characteristic bracket"},
    {"c-tol", "bisection width tolerance"},
    {"max-iter", "bisection iteration cap"},
    {"integrator", "manifold integrator: euler or rk4"},
    {"du-values", "du list for sweep --mode du"},
    {"out", "output CSV path (default stdout)"},
    {"frames", "simulate: also write all frames as t,x,u CSV"}};

struct Invocation {
    std::string config_path;
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;
};

void add_setting_flags(CLI::App* cmd, Invocation& inv) {
    cmd->add_option("--config", inv.config_path, "flat key = value config file");
    for (const auto& flag : kSettingFlags)
        inv.options[flag.name] = cmd->add_option(std::string("--") + flag.name, inv.values[flag.name], flag.help);
}

hf::ExperimentConfig build_config(const Invocation& inv, hf::ExperimentConfig cfg = {}) {
    if (!inv.config_path.empty()) hf::load_config_file(cfg, inv.config_path);
    for (const auto& flag : kSettingFlags)
        if (inv.options.at(flag.name)->count() > 0) hf::apply_setting(cfg, flag.name, inv.values.at(flag.name));
    return cfg;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw hf::ConfigError("cannot write '" + path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Front speeds of hyperbolic bistable reaction-diffusion equations"};
    app.require_subcommand(1);

    Invocation exact_inv, shoot_inv, sim_inv, est_inv, table_inv, sweep_inv;
    auto* exact = app.add_subcommand("exact", "closed-form speeds over an alpha grid");
    add_setting_flags(exact, exact_inv);
    auto* shoot = app.add_subcommand("shoot", "phase-plane shooting speed over an alpha grid");
    add_setting_flags(shoot, shoot_inv);
    auto* simulate = app.add_subcommand("simulate", "evolve one scheme from the Riemann datum");
    add_setting_flags(simulate, sim_inv);
    auto* estimate = app.add_subcommand("estimate", "simulate and estimate the front speed");
    add_setting_flags(estimate, est_inv);
    auto* table = app.add_subcommand("table", "speed-comparison table (A, Apwl, B); the preset fixes everything but grid, estimator and alpha settings");
    add_setting_flags(table, table_inv);
    std::string which = "A";
    table->add_option("--which", which, "A, Apwl or B")->check(CLI::IsMember({"A", "Apwl", "B"}));
    auto* sweep = app.add_subcommand("sweep", "speed-vs-alpha curves or shooter du-convergence");
    add_setting_flags(sweep, sweep_inv);
    std::string mode = "speeds";
    sweep->add_option("--mode", mode, "speeds or du")->check(CLI::IsMember({"speeds", "du"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (exact->parsed()) {
            auto cfg = build_config(exact_inv);
            cfg.params.validate();
            emit(cfg.out, hf::csv_exact(cfg));
        } else if (shoot->parsed()) {
            auto cfg = build_config(shoot_inv);
            emit(cfg.out, hf::csv_shoot(cfg));
        } else if (simulate->parsed()) {
            hf::ExperimentConfig start;
            start.schemes = {hf::SchemeKind::FirstOrder};
            auto cfg = build_config(sim_inv, start);
            cfg.validate();
            if (cfg.schemes.size() != 1) throw hf::ConfigError("simulate takes exactly one --scheme");
            const auto result = hf::run(cfg.schemes.front(), cfg.model(), cfg.params, cfg.grid,
                                        cfg.frame_stride_or_default());
            if (!cfg.frames_out.empty()) emit(cfg.frames_out, hf::csv_frames(result.frames, cfg.grid));
            emit(cfg.out, hf::csv_state(result.final_state, cfg.grid));
        } else if (estimate->parsed()) {
            auto cfg = build_config(est_inv);
            cfg.alphas = {cfg.alpha};
            emit(cfg.out, hf::csv_error_rows(hf::run_table(cfg)));
        } else if (table->parsed()) {
            auto base = build_config(table_inv);
            const auto cfg = hf::table_preset(hf::table_from_string(which), base);
            emit(cfg.out, hf::csv_error_rows(hf::run_table(cfg)));
        } else if (sweep->parsed()) {
            auto cfg = build_config(sweep_inv);
            emit(cfg.out, mode == "du" ? hf::csv_sweep_du(cfg) : hf::csv_sweep_speeds(cfg));
        }
    } catch (const hf::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const hf::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return 0;
}
