#pragma once

#include <span>
#include <vector>

#include "hyperfront/reaction.hpp"

namespace hyperfront {

/// Coefficients of  tau u_tt + (u - sigma f(u))_t = a u_xx + f(u).
struct ModelParams {
    double tau = 1.0;    ///< inertia time
    double sigma = 0.0;  ///< delay split, 0 <= sigma <= tau
    double a = 1.0;      ///< diffusivity

    /// Throws ValidationError unless 0 <= sigma <= tau and a > 0.
    void validate() const;
    bool is_relaxation() const { return tau > 0.0 && sigma == tau; }
};

/// Parabolic Allen-Cahn speed sqrt(2 a kappa) (1/2 - alpha).
double parabolic_cubic_speed(double a, double kappa, double alpha);

/// Damped cubic speed c0 / sqrt(1 + tau c0^2 / a).
double damped_cubic_speed(double a, double kappa, double alpha, double tau);

/// Exact speed for the piecewise-affine reaction, any 0 <= sigma <= tau.
double pwl_speed(double a, double m, double alpha, double sigma, double tau);

/// Closed-form parabolic front 1 / (1 + exp(sqrt(kappa/2a) (xi - xi0))).
double parabolic_cubic_profile(double xi, double a, double kappa, double xi0 = 0.0);

/// Standing front for an equal-well potential, normalized phi(0) = 1/2.
///
/// Inverts  int_{1/2}^{phi} ds / sqrt(W(s) - W(0)) = -sqrt(2/a) xi  pointwise
/// with adaptive quadrature and a bracketing root solver.
/// Throws NotEqualDepth if |W(1) - W(0)| > 1e-12.
std::vector<double> equal_depth_profile(const ReactionModel& model, double a,
                                        std::span<const double> xi_grid);

/// Closed-form speed when one exists: damped cubic (sigma == 0) or
/// piecewise-affine (any sigma). Returns false otherwise.
bool closed_form_speed(const ReactionModel& model, const ModelParams& params, double& out);

}  // namespace hyperfront
