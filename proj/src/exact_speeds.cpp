#include "hyperfront/exact_speeds.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <cstdint>
#include <string>

#include "hyperfront/errors.hpp"

namespace hyperfront {

void ModelParams::validate() const {
    if (!(a > 0.0)) throw ValidationError("diffusivity a must be positive");
    if (!(tau >= 0.0)) throw ValidationError("tau must be non-negative");
    if (!(sigma >= 0.0 && sigma <= tau))
        throw ValidationError("sigma must satisfy 0 <= sigma <= tau (sigma=" +
                              std::to_string(sigma) + ", tau=" + std::to_string(tau) + ")");
}

double parabolic_cubic_speed(double a, double kappa, double alpha) {
    return std::sqrt(2.0 * a * kappa) * (0.5 - alpha);
}

double damped_cubic_speed(double a, double kappa, double alpha, double tau) {
    const double c0 = parabolic_cubic_speed(a, kappa, alpha);
    return c0 / std::sqrt(1.0 + tau * c0 * c0 / a);
}

double pwl_speed(double a, double m, double alpha, double sigma, double tau) {
    const double g = 1.0 + m * sigma;
    const double d = 2.0 * alpha - 1.0;
    const double denom = g * g * alpha * (1.0 - alpha) + m * tau * d * d;
    return std::sqrt(m * a / denom) * (1.0 - 2.0 * alpha);
}

double parabolic_cubic_profile(double xi, double a, double kappa, double xi0) {
    return 1.0 / (1.0 + std::exp(std::sqrt(kappa / (2.0 * a)) * (xi - xi0)));
}

std::vector<double> equal_depth_profile(const ReactionModel& model, double a,
                                        std::span<const double> xi_grid) {
    const double w0 = model.W(0.0);
    if (std::abs(model.W(1.0) - w0) > 1e-12)
        throw NotEqualDepth("wells differ: W(1)-W(0) = " + std::to_string(model.W(1.0) - w0));

    using boost::math::quadrature::gauss_kronrod;
    // G(phi) = int_{1/2}^{phi} ds / sqrt(W(s) - W(0)), increasing on (0,1). The
    // integrand blows up like 1/s at the wells, so integrate in y = log of the
    // distance to the nearer well, where it stays bounded.
    auto lower = [&](double y) {
        const double s = std::exp(y);
        return s / std::sqrt(std::max(model.W(s) - w0, 1e-300));
    };
    auto upper = [&](double y) {
        const double d = std::exp(y);
        return d / std::sqrt(std::max(model.W(1.0 - d) - w0, 1e-300));
    };
    const double half = std::log(0.5);
    auto G = [&](double phi) {
        if (phi == 0.5) return 0.0;
        if (phi < 0.5) return -gauss_kronrod<double, 31>::integrate(lower, std::log(phi), half, 15, 1e-13);
        return gauss_kronrod<double, 31>::integrate(upper, std::log(1.0 - phi), half, 15, 1e-13);
    };
    const double scale = std::sqrt(2.0 / a);

    std::vector<double> out;
    out.reserve(xi_grid.size());
    for (double xi : xi_grid) {
        const double target = -scale * xi;
        if (target == 0.0) {
            out.push_back(0.5);
            continue;
        }
        // Bracket in (0,1); G diverges at both ends so a root always exists.
        const double lo = target < 0.0 ? 1e-10 : 0.5;
        const double hi = target < 0.0 ? 0.5 : 1.0 - 1e-10;
        auto residual = [&](double phi) { return G(phi) - target; };
        // Beyond the resolvable tail the profile sits on its asymptotic state.
        if (target < 0.0 && residual(lo) > 0.0) {
            out.push_back(0.0);
            continue;
        }
        if (target > 0.0 && residual(hi) < 0.0) {
            out.push_back(1.0);
            continue;
        }
        std::uintmax_t max_iter = 200;
        auto [r_lo, r_hi] = boost::math::tools::toms748_solve(
            residual, lo, hi, boost::math::tools::eps_tolerance<double>(50), max_iter);
        out.push_back(0.5 * (r_lo + r_hi));
    }
    return out;
}

bool closed_form_speed(const ReactionModel& model, const ModelParams& params, double& out) {
    if (const auto* c = std::get_if<CubicReaction>(&model.variant())) {
        if (params.sigma != 0.0) return false;
        out = damped_cubic_speed(params.a, c->kappa, c->alpha, params.tau);
        return true;
    }
    const auto& p = std::get<PiecewiseAffineReaction>(model.variant());
    out = pwl_speed(params.a, p.m, p.alpha, params.sigma, params.tau);
    return true;
}

}  // namespace hyperfront
