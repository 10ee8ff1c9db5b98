#include "hyperfront/experiment.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace hyperfront {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(trim(text), &used);
        if (used != trim(text).size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("setting '" + key + "': not a number: '" + text + "'");
    }
}

long parse_integer(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const long v = std::stol(trim(text), &used);
        if (used != trim(text).size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("setting '" + key + "': not an integer: '" + text + "'");
    }
}

std::string num(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return fmt::format("{}", x);
}

}  // namespace

ReactionModel ExperimentConfig::model_at(double a) const {
    if (family == ReactionFamily::Cubic) return ReactionModel::cubic(kappa, a);
    return ReactionModel::piecewise_affine(m, a);
}

long ExperimentConfig::p_or_default() const {
    return p.value_or(std::max(1L, grid.N() / 2));
}

long ExperimentConfig::frame_stride_or_default() const {
    return frame_stride.value_or(default_frame_stride(grid));
}

std::vector<double> ExperimentConfig::alpha_grid() const {
    return alphas.empty() ? std::vector<double>{alpha} : alphas;
}

void ExperimentConfig::validate() const {
    params.validate();
    grid.validate();
    (void)model();
    for (double a : alphas) (void)model_at(a);
    if (schemes.empty()) throw ConfigError("at least one scheme is required");
    for (auto s : schemes)
        if (s == SchemeKind::Kinetic && params.sigma != params.tau)
            throw WrongRegime("kinetic scheme requires sigma == tau");
    if (theta && !(*theta > 0.0 && *theta < 1.0)) throw ConfigError("theta must lie in (0,1)");
    if (p && (*p < 1 || *p > grid.N())) throw ConfigError("p must lie in [1, T/dt]");
    if (frame_stride && *frame_stride < 1) throw ConfigError("frame stride must be >= 1");
    if (ly_begin_or_default() >= ly_end_or_default())
        throw ConfigError("LeVeque-Yee window must have ly_begin < ly_end");
    if (!(shooting.du > 0.0 && shooting.epsilon > 0.0 && shooting.c_tol > 0.0))
        throw ConfigError("shooting du, epsilon and c_tol must be positive");
    if (!(shooting.bracket_margin > 0.0 && shooting.bracket_margin < 1.0))
        throw ConfigError("bracket_margin must lie in (0,1)");
}

std::vector<double> parse_real_list(const std::string& text) {
    const std::string t = trim(text);
    std::vector<double> out;
    if (t.empty()) return out;
    if (t.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(t);
        for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
        if (parts.size() != 3) throw ConfigError("range must be start:stop:step, got '" + t + "'");
        const double start = parse_real("range", parts[0]);
        const double stop = parse_real("range", parts[1]);
        const double stride = parse_real("range", parts[2]);
        if (!(stride > 0.0) || stop < start) throw ConfigError("bad range '" + t + "'");
        const auto count = static_cast<long>(std::floor((stop - start) / stride + 1e-9));
        for (long i = 0; i <= count; ++i) out.push_back(start + static_cast<double>(i) * stride);
        return out;
    }
    std::stringstream ss(t);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_real("list", item));
    return out;
}

void apply_setting(ExperimentConfig& cfg, const std::string& raw_key, const std::string& value) {
    std::string key = trim(raw_key);
    std::replace(key.begin(), key.end(), '-', '_');
    const std::string v = trim(value);
    if (key == "family") {
        if (v == "cubic")
            cfg.family = ReactionFamily::Cubic;
        else if (v == "pwl" || v == "piecewise_affine")
            cfg.family = ReactionFamily::PiecewiseAffine;
        else
            throw ConfigError("unknown family '" + v + "' (expected cubic or pwl)");
    } else if (key == "kappa") cfg.kappa = parse_real(key, v);
    else if (key == "m") cfg.m = parse_real(key, v);
    else if (key == "alpha") cfg.alpha = parse_real(key, v);
    else if (key == "tau") cfg.params.tau = parse_real(key, v);
    else if (key == "sigma") cfg.params.sigma = parse_real(key, v);
    else if (key == "a") cfg.params.a = parse_real(key, v);
    else if (key == "dx") cfg.grid.dx = parse_real(key, v);
    else if (key == "dt") cfg.grid.dt = parse_real(key, v);
    else if (key == "L") cfg.grid.L = parse_real(key, v);
    else if (key == "T") cfg.grid.T = parse_real(key, v);
    else if (key == "scheme" || key == "schemes") {
        cfg.schemes.clear();
        std::stringstream ss(v);
        for (std::string item; std::getline(ss, item, ',');)
            cfg.schemes.push_back(scheme_from_string(trim(item)));
    } else if (key == "theta") cfg.theta = parse_real(key, v);
    else if (key == "p") cfg.p = parse_integer(key, v);
    else if (key == "ly_begin") cfg.ly_begin = parse_real(key, v);
    else if (key == "ly_end") cfg.ly_end = parse_real(key, v);
    else if (key == "frame_stride") cfg.frame_stride = parse_integer(key, v);
    else if (key == "du") cfg.shooting.du = parse_real(key, v);
    else if (key == "epsilon") cfg.shooting.epsilon = parse_real(key, v);
    else if (key == "bracket_margin") cfg.shooting.bracket_margin = parse_real(key, v);
    else if (key == "c_tol") cfg.shooting.c_tol = parse_real(key, v);
    else if (key == "max_iter") cfg.shooting.max_iter = static_cast<int>(parse_integer(key, v));
    else if (key == "integrator") {
        if (v == "euler")
            cfg.shooting.integrator = ManifoldIntegrator::ForwardEuler;
        else if (v == "rk4")
            cfg.shooting.integrator = ManifoldIntegrator::RungeKutta4;
        else
            throw ConfigError("unknown integrator '" + v + "' (expected euler or rk4)");
    } else if (key == "alphas") cfg.alphas = parse_real_list(v);
    else if (key == "du_values") cfg.du_values = parse_real_list(v);
    else if (key == "out") cfg.out = v;
    else if (key == "frames") cfg.frames_out = v;
    else
        throw ConfigError("unknown setting '" + raw_key + "'");
}

void load_config_text(ExperimentConfig& cfg, const std::string& text) {
    std::stringstream in(text);
    int lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        apply_setting(cfg, line.substr(0, eq), line.substr(eq + 1));
    }
}

void load_config_file(ExperimentConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    load_config_text(cfg, buf.str());
}

double relative_error(double c, double c_ex) { return std::abs(c - c_ex) / std::abs(c_ex); }

double reference_speed(const ReactionModel& model, const ModelParams& params,
                       const ShootingConfig& shooting) {
    double c = 0.0;
    if (closed_form_speed(model, params, c)) return c;
    return find_speed(model, params, shooting).c_star;
}

ErrorRow estimate_row(const ExperimentConfig& cfg, SchemeKind scheme, double c_ex) {
    const auto model = cfg.model();
    const auto& grid = cfg.grid;
    const long total = grid.N();
    const long p = cfg.p_or_default();
    const long stride = cfg.frame_stride_or_default();
    const long ss_start = total - p;

    auto state = init_riemann(scheme, model, cfg.params, grid);
    auto mats = assemble_matrices(scheme, cfg.params, grid);
    std::vector<Frame> frames{{state.step, state.t, state.u}};
    std::vector<double> ss_frame = ss_start == 0 ? state.u : std::vector<double>{};
    for (long n = 0; n < total; ++n) {
        step(state, model, cfg.params, grid, mats);
        if (state.step == ss_start) ss_frame = state.u;
        if (state.step % stride == 0 || state.step == total)
            frames.push_back({state.step, state.t, state.u});
    }

    ErrorRow row;
    row.alpha = cfg.alpha;
    row.c_ex = c_ex;
    row.scheme = scheme;
    const auto ss = scout_and_spot(ss_frame, state.u, cfg.theta_or_default(), grid.dx, grid.dt, p);
    row.c_ss = ss.value;
    row.ss_quanta = ss.quanta;
    // Decreasing front: phi(+inf) - phi(-inf) = 0 - 1.
    const auto ly = leveque_yee_series(frames, -1.0, grid.dx, cfg.ly_begin_or_default(),
                                       cfg.ly_end_or_default());
    row.c_ly = ly.value;
    row.ly_stddev = ly.stddev;
    row.E_ss = relative_error(row.c_ss, c_ex);
    row.E_ly = relative_error(row.c_ly, c_ex);
    return row;
}

TableKind table_from_string(const std::string& name) {
    if (name == "A") return TableKind::A;
    if (name == "Apwl") return TableKind::Apwl;
    if (name == "B") return TableKind::B;
    throw ConfigError("unknown table '" + name + "' (expected A, Apwl or B)");
}

ExperimentConfig table_preset(TableKind which, const ExperimentConfig& base) {
    ExperimentConfig cfg = base;
    if (cfg.alphas.empty()) cfg.alphas = {0.125, 0.25, 0.375};
    cfg.params = ModelParams{1.0, 0.0, 1.0};
    cfg.kappa = 1.0;
    cfg.m = 1.0;
    switch (which) {
        case TableKind::A:
            cfg.family = ReactionFamily::Cubic;
            cfg.schemes = {SchemeKind::FirstOrder, SchemeKind::Lienard};
            break;
        case TableKind::Apwl:
            cfg.family = ReactionFamily::PiecewiseAffine;
            cfg.schemes = {SchemeKind::FirstOrder, SchemeKind::Lienard};
            break;
        case TableKind::B:
            cfg.family = ReactionFamily::Cubic;
            cfg.params.sigma = cfg.params.tau;
            cfg.schemes = {SchemeKind::FirstOrder, SchemeKind::Lienard, SchemeKind::Kinetic};
            break;
    }
    return cfg;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& job, unsigned workers) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    job(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

std::vector<ErrorRow> run_table(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto alphas = cfg.alpha_grid();
    std::vector<double> c_ex(alphas.size());
    parallel_for(alphas.size(), [&](std::size_t i) {
        c_ex[i] = reference_speed(cfg.model_at(alphas[i]), cfg.params, cfg.shooting);
    });

    const std::size_t per_alpha = cfg.schemes.size();
    std::vector<ErrorRow> rows(alphas.size() * per_alpha);
    parallel_for(rows.size(), [&](std::size_t k) {
        ExperimentConfig job = cfg;
        job.alpha = alphas[k / per_alpha];
        job.alphas.clear();
        rows[k] = estimate_row(job, cfg.schemes[k % per_alpha], c_ex[k / per_alpha]);
    });
    return rows;
}

std::string csv_error_rows(const std::vector<ErrorRow>& rows) {
    std::string out = std::string(kErrorRowHeader) + "\n";
    for (const auto& r : rows)
        out += fmt::format("{},{},{},{},{},{},{}\n", num(r.alpha), num(r.c_ex), to_string(r.scheme),
                           num(r.c_ss), num(r.E_ss), num(r.c_ly), num(r.E_ly));
    return out;
}

std::string csv_exact(const ExperimentConfig& cfg) {
    cfg.validate();
    std::string out = "alpha,c0,c_tau,c_pwl\n";
    for (double al : cfg.alpha_grid()) {
        const double a = cfg.params.a;
        out += fmt::format("{},{},{},{}\n", num(al), num(parabolic_cubic_speed(a, cfg.kappa, al)),
                           num(damped_cubic_speed(a, cfg.kappa, al, cfg.params.tau)),
                           num(pwl_speed(a, cfg.m, al, cfg.params.sigma, cfg.params.tau)));
    }
    return out;
}

std::string csv_shoot(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto alphas = cfg.alpha_grid();
    std::vector<ShootingResult> results(alphas.size());
    parallel_for(alphas.size(), [&](std::size_t i) {
        results[i] = find_speed(cfg.model_at(alphas[i]), cfg.params, cfg.shooting);
    });
    std::string out = "alpha,c_star,iterations,mismatch,c_closed,rel_error\n";
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        double closed = 0.0;
        const bool has = closed_form_speed(cfg.model_at(alphas[i]), cfg.params, closed);
        out += fmt::format("{},{},{},{},{},{}\n", num(alphas[i]), num(results[i].c_star),
                           results[i].iterations, num(results[i].final_mismatch),
                           has ? num(closed) : "",
                           has && closed != 0.0 ? num(relative_error(results[i].c_star, closed)) : "");
    }
    return out;
}

std::string csv_sweep_speeds(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto alphas = cfg.alpha_grid();
    const double tau = cfg.params.tau;
    std::vector<std::array<double, 3>> speeds(alphas.size());
    parallel_for(alphas.size(), [&](std::size_t i) {
        const auto model = cfg.model_at(alphas[i]);
        const double a = cfg.params.a;
        speeds[i][0] = reference_speed(model, ModelParams{0.0, 0.0, a}, cfg.shooting);
        speeds[i][1] = reference_speed(model, ModelParams{tau, 0.0, a}, cfg.shooting);
        speeds[i][2] = reference_speed(model, ModelParams{tau, tau, a}, cfg.shooting);
    });
    std::string out = "alpha,c_parabolic,c_damped,c_relaxation\n";
    for (std::size_t i = 0; i < alphas.size(); ++i)
        out += fmt::format("{},{},{},{}\n", num(alphas[i]), num(speeds[i][0]), num(speeds[i][1]),
                           num(speeds[i][2]));
    return out;
}

std::string csv_sweep_du(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto alphas = cfg.alpha_grid();
    const auto& dus = cfg.du_values;
    struct Cell {
        double c_shoot = 0.0, c_ex = 0.0;
    };
    std::vector<Cell> cells(alphas.size() * dus.size());
    parallel_for(cells.size(), [&](std::size_t k) {
        const auto model = cfg.model_at(alphas[k / dus.size()]);
        ShootingConfig sc = cfg.shooting;
        sc.du = dus[k % dus.size()];
        if (!closed_form_speed(model, cfg.params, cells[k].c_ex))
            throw WrongRegime("du sweep needs a closed-form speed (cubic with sigma = 0, or pwl)");
        cells[k].c_shoot = find_speed(model, cfg.params, sc).c_star;
    });
    std::string out = "alpha,du,c_shoot,c_ex,E,E_over_du\n";
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const double du = dus[k % dus.size()];
        const double E = relative_error(cells[k].c_shoot, cells[k].c_ex);
        out += fmt::format("{},{},{},{},{},{}\n", num(alphas[k / dus.size()]), num(du),
                           num(cells[k].c_shoot), num(cells[k].c_ex), num(E), num(E / du));
    }
    return out;
}

std::string csv_frames(const std::vector<Frame>& frames, const Grid& grid) {
    std::string out = "t,x,u\n";
    for (const auto& f : frames)
        for (std::size_t j = 0; j < f.u.size(); ++j)
            out += fmt::format("{},{},{}\n", num(f.t), num(grid.x(static_cast<int>(j))), num(f.u[j]));
    return out;
}

std::string csv_state(const SimState& st, const Grid& grid) {
    const bool kinetic = st.kind == SchemeKind::Kinetic;
    std::string out = kinetic ? "x,u,r,s\n" : "x,u,v\n";
    for (std::size_t j = 0; j < st.u.size(); ++j) {
        const double x = grid.x(static_cast<int>(j));
        if (kinetic)
            out += fmt::format("{},{},{},{}\n", num(x), num(st.u[j]), num(st.r[j]), num(st.s[j]));
        else
            out += fmt::format("{},{},{}\n", num(x), num(st.u[j]), num(st.v[j]));
    }
    return out;
}

}  // namespace hyperfront
