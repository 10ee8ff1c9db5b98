#pragma once

#include <utility>
#include <vector>

#include "hyperfront/errors.hpp"
#include "hyperfront/exact_speeds.hpp"
#include "hyperfront/reaction.hpp"

namespace hyperfront {

/// Integrator used along the manifolds in the (phi, v) plane.
enum class ManifoldIntegrator {
    ForwardEuler,  ///< first order in du; reproduces the reference error tables
    RungeKutta4,
};

struct ShootingConfig {
    double du = 1e-5;              ///< phi-step
    double epsilon = 1e-8;         ///< launch offset from the saddle
    double bracket_margin = 1e-6;  ///< bracket is (1 - margin) * sqrt(a/tau)
    double c_tol = 1e-10;          ///< final bracket width
    int max_iter = 200;
    double zero_guard = 1e-14;     ///< v >= -zero_guard counts as a zero crossing
    ManifoldIntegrator integrator = ManifoldIntegrator::ForwardEuler;
};

struct ShootingResult {
    double c_star = 0.0;
    int iterations = 0;
    double final_mismatch = 0.0;
    std::vector<std::pair<double, double>> bracket_history;
};

enum class ManifoldSide { FromZero, FromOne };

/// v reached zero before phi = alpha.
class EarlyZeroCrossing : public NumericalError {
public:
    EarlyZeroCrossing(ManifoldSide side, double phi);
    ManifoldSide side;
    double phi;
};

struct Eigenpair {
    double lambda_minus;
    double lambda_plus;
};

/// Roots of (a - tau c^2) l^2 + c (1 + sigma W''(ubar)) l - W''(ubar) = 0.
/// Throws DegenerateWaveOperator if a - tau c^2 <= 0 and ComplexRoots if the
/// discriminant is negative.
Eigenpair eigenvalues(const ReactionModel& model, const ModelParams& params, double ubar, double c);

/// Integrates dv/dphi = (W'(phi)/v - c (1 + sigma W''(phi))) / (a - tau c^2)
/// from the chosen saddle to phi = alpha and returns v(alpha).
double integrate_manifold(const ReactionModel& model, const ModelParams& params, double c,
                          ManifoldSide side, const ShootingConfig& config = {});

/// Sentinel magnitude returned by mismatch when a manifold hits v = 0 early.
inline constexpr double kMismatchSentinel = 1e6;

/// h(c) = v_FromZero(alpha) - v_FromOne(alpha). Decreasing in c; its zero is the
/// front speed.
double mismatch(const ReactionModel& model, const ModelParams& params, double c,
                const ShootingConfig& config = {});

/// Initial bisection bracket for c.
std::pair<double, double> speed_bracket(const ReactionModel& model, const ModelParams& params,
                                        const ShootingConfig& config = {});

/// Bisects h on the bracket until its width is below config.c_tol.
/// Throws NoSignChange or NonConvergence.
ShootingResult find_speed(const ReactionModel& model, const ModelParams& params,
                          const ShootingConfig& config = {});

}  // namespace hyperfront
