#include "hyperfront/shooting.hpp"

#include <fmt/core.h>

#include <cmath>
#include <string>

namespace hyperfront {

namespace {

const char* side_name(ManifoldSide side) {
    return side == ManifoldSide::FromZero ? "FromZero" : "FromOne";
}

struct ManifoldRhs {
    const ReactionModel& model;
    double c;
    double sigma;
    double denom;  // a - tau c^2
    Side branch;

    double operator()(double phi, double v) const {
        const double dW = -model.f(phi, branch);
        return (dW / v - c * (1.0 + sigma * model.d2W(phi, branch))) / denom;
    }
};

double wave_denominator(const ModelParams& params, double c) {
    const double denom = params.a - params.tau * c * c;
    if (!(denom > 0.0))
        throw DegenerateWaveOperator("a - tau c^2 = " + std::to_string(denom) +
                                     " is not positive for c = " + std::to_string(c));
    return denom;
}

}  // namespace

EarlyZeroCrossing::EarlyZeroCrossing(ManifoldSide s, double p)
    : NumericalError(std::string("manifold ") + side_name(s) + " reached v = 0 at phi = " +
                     std::to_string(p)),
      side(s),
      phi(p) {}

Eigenpair eigenvalues(const ReactionModel& model, const ModelParams& params, double ubar,
                      double c) {
    const double denom = wave_denominator(params, c);
    const double w2 = model.d2W(ubar);
    const double damping = c * (1.0 + params.sigma * w2);
    const double disc = damping * damping + 4.0 * denom * w2;
    if (disc < 0.0)
        throw ComplexRoots("negative discriminant " + std::to_string(disc) + " at ubar = " +
                           std::to_string(ubar));
    const double root = std::sqrt(disc);
    return {(-damping - root) / (2.0 * denom), (-damping + root) / (2.0 * denom)};
}

double integrate_manifold(const ReactionModel& model, const ModelParams& params, double c,
                          ManifoldSide side, const ShootingConfig& config) {
    const double denom = wave_denominator(params, c);
    const double alpha = model.alpha();
    const bool from_zero = side == ManifoldSide::FromZero;

    // Launch along the linearized stable (at 0) / unstable (at 1) direction.
    double phi0, v;
    if (from_zero) {
        phi0 = config.epsilon;
        v = eigenvalues(model, params, 0.0, c).lambda_minus * config.epsilon;
    } else {
        phi0 = 1.0 - config.epsilon;
        v = -eigenvalues(model, params, 1.0, c).lambda_plus * config.epsilon;
    }
    if (v >= -config.zero_guard) throw EarlyZeroCrossing(side, phi0);

    const ManifoldRhs rhs{model, c, params.sigma, denom, from_zero ? Side::Below : Side::Above};
    const double span = std::abs(alpha - phi0);
    const auto steps = static_cast<long>(std::ceil(span / config.du - 1e-9));
    const double dir = from_zero ? 1.0 : -1.0;

    for (long k = 0; k < steps; ++k) {
        const double phi = phi0 + dir * static_cast<double>(k) * config.du;
        const bool last = k + 1 == steps;
        const double next = last ? alpha : phi0 + dir * static_cast<double>(k + 1) * config.du;
        const double h = next - phi;
        if (config.integrator == ManifoldIntegrator::ForwardEuler) {
            v += h * rhs(phi, v);
        } else {
            const double k1 = rhs(phi, v);
            const double v2 = v + 0.5 * h * k1;
            if (v2 >= -config.zero_guard) {
                if (last) return 0.0;
                throw EarlyZeroCrossing(side, phi + 0.5 * h);
            }
            const double k2 = rhs(phi + 0.5 * h, v2);
            const double v3 = v + 0.5 * h * k2;
            if (v3 >= -config.zero_guard) {
                if (last) return 0.0;
                throw EarlyZeroCrossing(side, phi + 0.5 * h);
            }
            const double k3 = rhs(phi + 0.5 * h, v3);
            const double v4 = v + h * k3;
            if (v4 >= -config.zero_guard) {
                if (last) return 0.0;
                throw EarlyZeroCrossing(side, next);
            }
            const double k4 = rhs(next, v4);
            v += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        if (!(v < -config.zero_guard)) {
            // Reaching v = 0 on the last step means the manifold runs into the
            // equilibrium at alpha (a stable node there), not a premature crossing.
            if (last) return 0.0;
            throw EarlyZeroCrossing(side, next);
        }
    }
    return v;
}

double mismatch(const ReactionModel& model, const ModelParams& params, double c,
                const ShootingConfig& config) {
    double v0 = 0.0, v1 = 0.0;
    bool zero_crossed = false, one_crossed = false;
    try {
        v0 = integrate_manifold(model, params, c, ManifoldSide::FromZero, config);
    } catch (const EarlyZeroCrossing&) {
        zero_crossed = true;
    }
    try {
        v1 = integrate_manifold(model, params, c, ManifoldSide::FromOne, config);
    } catch (const EarlyZeroCrossing&) {
        one_crossed = true;
    }
    if (zero_crossed && one_crossed)
        throw NumericalError("both manifolds reached v = 0 before phi = alpha at c = " +
                             std::to_string(c));
    if (zero_crossed) return kMismatchSentinel;
    if (one_crossed) return -kMismatchSentinel;
    return v0 - v1;
}

std::pair<double, double> speed_bracket(const ReactionModel& model, const ModelParams& params,
                                        const ShootingConfig& config) {
    if (params.tau > 0.0) {
        const double cmax = (1.0 - config.bracket_margin) * std::sqrt(params.a / params.tau);
        return {-cmax, cmax};
    }
    // Parabolic limit: no characteristic bound, widen until h changes sign.
    const double stiffness = std::max(model.d2W(0.0), model.d2W(1.0));
    double c = std::sqrt(2.0 * params.a * stiffness);
    for (int i = 0; i < 60; ++i, c *= 2.0) {
        if (std::signbit(mismatch(model, params, -c, config)) !=
            std::signbit(mismatch(model, params, c, config)))
            return {-c, c};
    }
    throw NoSignChange("no sign change of h(c) found for the parabolic bracket scan");
}

ShootingResult find_speed(const ReactionModel& model, const ModelParams& params,
                          const ShootingConfig& config) {
    params.validate();
    auto [lo, hi] = speed_bracket(model, params, config);
    const double h_lo = mismatch(model, params, lo, config);
    const double h_hi = mismatch(model, params, hi, config);
    if (h_lo == 0.0 || h_hi == 0.0 || std::signbit(h_lo) == std::signbit(h_hi))
        throw NoSignChange("h(" + std::to_string(lo) + ") = " + std::to_string(h_lo) + ", h(" +
                           std::to_string(hi) + ") = " + std::to_string(h_hi));
    const bool lo_negative = std::signbit(h_lo);

    ShootingResult result;
    result.bracket_history.emplace_back(lo, hi);
    while (hi - lo > config.c_tol) {
        if (result.iterations >= config.max_iter)
            throw NonConvergence("bisection did not reach width " + fmt::format("{:g}", config.c_tol) +
                                 " in " + std::to_string(config.max_iter) + " iterations");
        const double mid = 0.5 * (lo + hi);
        const double h_mid = mismatch(model, params, mid, config);
        ++result.iterations;
        if (h_mid == 0.0) {
            lo = hi = mid;
        } else if (std::signbit(h_mid) == lo_negative) {
            lo = mid;
        } else {
            hi = mid;
        }
        result.bracket_history.emplace_back(lo, hi);
    }
    result.c_star = 0.5 * (lo + hi);
    result.final_mismatch = mismatch(model, params, result.c_star, config);
    return result;
}

}  // namespace hyperfront
