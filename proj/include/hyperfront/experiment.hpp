#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperfront/estimators.hpp"
#include "hyperfront/shooting.hpp"

namespace hyperfront {

enum class ReactionFamily { Cubic, PiecewiseAffine };

/// Everything one experiment needs. Defaults reproduce the reference setup:
/// a = kappa = m = 1, L = 50, T = 20, dx = 0.1, dt = 1e-3.
struct ExperimentConfig {
    ReactionFamily family = ReactionFamily::Cubic;
    double kappa = 1.0;
    double m = 1.0;
    double alpha = 0.25;
    ModelParams params{1.0, 0.0, 1.0};
    Grid grid{};
    std::vector<SchemeKind> schemes{SchemeKind::FirstOrder, SchemeKind::Lienard};

    std::optional<double> theta;     ///< scout & spot level, defaults to alpha
    std::optional<long> p;           ///< scout & spot frame gap in steps, defaults to T/(2 dt)
    std::optional<double> ly_begin;  ///< LeVeque-Yee window, defaults to [T/2, T]
    std::optional<double> ly_end;
    std::optional<long> frame_stride;

    ShootingConfig shooting{};
    std::vector<double> alphas;      ///< grid for exact/shoot/sweep; empty means {alpha}
    std::vector<double> du_values{1e-2, 1e-3, 1e-4, 1e-5};

    std::string out;                 ///< output path, empty for stdout
    std::string frames_out;          ///< frame dump path (simulate)

    ReactionModel model() const { return model_at(alpha); }
    ReactionModel model_at(double a) const;
    double theta_or_default() const { return theta.value_or(alpha); }
    long p_or_default() const;
    double ly_begin_or_default() const { return ly_begin.value_or(0.5 * grid.T); }
    double ly_end_or_default() const { return ly_end.value_or(grid.T); }
    long frame_stride_or_default() const;
    std::vector<double> alpha_grid() const;

    /// Throws ConfigError/ValidationError on inconsistent settings.
    void validate() const;
};

/// Applies one key=value setting; keys match the CLI long flags.
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);

/// Reads a flat "key = value" file ('#' starts a comment).
void load_config_file(ExperimentConfig& cfg, const std::string& path);
void load_config_text(ExperimentConfig& cfg, const std::string& text);

/// Parses "0.1,0.2" or "start:stop:step" (inclusive).
std::vector<double> parse_real_list(const std::string& text);

/// One (alpha, scheme) cell of a speed-comparison table.
struct ErrorRow {
    double alpha = 0.0;
    double c_ex = 0.0;
    SchemeKind scheme = SchemeKind::FirstOrder;
    double c_ss = 0.0;
    double E_ss = 0.0;
    double c_ly = 0.0;
    double E_ly = 0.0;
    double ly_stddev = 0.0;
    long ss_quanta = 0;
};

/// |c - c_ex| / |c_ex|.
double relative_error(double c, double c_ex);

/// Reference speed: closed form when one exists, otherwise the shooter.
double reference_speed(const ReactionModel& model, const ModelParams& params,
                       const ShootingConfig& shooting);

/// Simulates one scheme and measures both estimators against c_ex.
ErrorRow estimate_row(const ExperimentConfig& cfg, SchemeKind scheme, double c_ex);

enum class TableKind { A, Apwl, B };
TableKind table_from_string(const std::string& name);

/// Preset for the damped cubic (A), damped piecewise-affine (Apwl) or
/// relaxation cubic (B) comparison; grid and estimator settings come from base,
/// and so does the alpha list when base sets one.
ExperimentConfig table_preset(TableKind which, const ExperimentConfig& base);

std::vector<ErrorRow> run_table(const ExperimentConfig& cfg);

/// Runs n independent jobs on a worker pool; results keep job order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& job,
                  unsigned workers = 0);

/// CSV emitters. Each returns the full document with its fixed header row.
std::string csv_exact(const ExperimentConfig& cfg);
std::string csv_shoot(const ExperimentConfig& cfg);
std::string csv_error_rows(const std::vector<ErrorRow>& rows);
std::string csv_sweep_speeds(const ExperimentConfig& cfg);
std::string csv_sweep_du(const ExperimentConfig& cfg);
std::string csv_frames(const std::vector<Frame>& frames, const Grid& grid);
std::string csv_state(const SimState& state, const Grid& grid);

inline constexpr const char* kErrorRowHeader = "alpha,c_ex,scheme,c_ss,E_ss,c_ly,E_ly";

}  // namespace hyperfront
