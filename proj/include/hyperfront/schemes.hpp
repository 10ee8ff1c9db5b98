#pragma once

#include <cmath>
#include <concepts>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperfront/banded.hpp"
#include "hyperfront/errors.hpp"
#include "hyperfront/exact_speeds.hpp"
#include "hyperfront/reaction.hpp"

namespace hyperfront {

/// Anything providing f, f' and the potential W. ReactionModel is the
/// production instance; tests plug in synthetic sources.
template <class R>
concept ReactionSource = requires(const R& r, double u) {
    { r.f(u) } -> std::convertible_to<double>;
    { r.df(u) } -> std::convertible_to<double>;
    { r.W(u) } -> std::convertible_to<double>;
};

enum class SchemeKind { FirstOrder, Lienard, Kinetic };

std::string to_string(SchemeKind kind);
SchemeKind scheme_from_string(const std::string& name);

/// Uniform mesh x_j = j dx on [0, L], t^n = n dt on [0, T].
struct Grid {
    double dx = 0.1;
    double dt = 1e-3;
    double L = 50.0;
    double T = 20.0;

    int J() const { return static_cast<int>(std::floor(L / dx + 1e-9)) + 1; }
    long N() const { return static_cast<long>(std::floor(T / dt + 1e-9)); }
    double x(int j) const { return j * dx; }
    double parabolic_ratio() const { return dt / (dx * dx); }
    void validate() const;
};

struct SimState {
    SchemeKind kind = SchemeKind::FirstOrder;
    std::vector<double> u;
    std::vector<double> v;  ///< FirstOrder: u_t.  Lienard: tau u_t + u - sigma f(u).
    std::vector<double> r;  ///< Kinetic diagonal variables, u = r + s.
    std::vector<double> s;
    long step = 0;
    double t = 0.0;
};

/// Constant left-hand-side operator of one scheme on one grid, factored once.
struct SchemeMatrices {
    SchemeKind kind = SchemeKind::FirstOrder;
    double alpha = 0.0;  ///< diffusion (FirstOrder/Lienard) or CFL number (Kinetic)
    double beta = 0.0;
    double rho = 0.0;    ///< characteristic speed sqrt(a/tau), Kinetic only
    std::optional<TridiagonalLU> tridiagonal;
    std::optional<BandedLU> banded;
    std::vector<double> scratch;
};

/// Checks params and the scheme regime. Kinetic requires sigma == tau > 0;
/// every scheme needs tau > 0.
void validate_scheme(SchemeKind kind, const ModelParams& params);

SchemeMatrices assemble_matrices(SchemeKind kind, const ModelParams& params, const Grid& grid);

namespace detail {

inline double laplacian(std::span<const double> u, std::size_t j) {
    const std::size_t last = u.size() - 1;
    const double left = j == 0 ? u[0] : u[j - 1];
    const double right = j == last ? u[last] : u[j + 1];
    return left - 2.0 * u[j] + right;
}

inline void check_finite(std::span<const double> values, long step, const char* name) {
    for (double x : values)
        if (!std::isfinite(x)) throw BlowUp(step, name);
}

}  // namespace detail

/// State at rest (u_t = 0) from a given u-profile.
template <ReactionSource R>
SimState init_from_profile(SchemeKind kind, const R& model, const ModelParams& params,
                           std::vector<double> u) {
    validate_scheme(kind, params);
    SimState st;
    st.kind = kind;
    switch (kind) {
        case SchemeKind::FirstOrder:
            st.v.assign(u.size(), 0.0);
            break;
        case SchemeKind::Lienard:
            st.v.resize(u.size());
            for (std::size_t j = 0; j < u.size(); ++j) st.v[j] = u[j] - params.sigma * model.f(u[j]);
            break;
        case SchemeKind::Kinetic:
            st.r.resize(u.size());
            st.s.resize(u.size());
            for (std::size_t j = 0; j < u.size(); ++j) st.r[j] = st.s[j] = 0.5 * u[j];
            break;
    }
    st.u = std::move(u);
    return st;
}

/// Riemann datum: u = 1 left of x = jump_at (default L/2), 0 from there on.
template <ReactionSource R>
SimState init_riemann(SchemeKind kind, const R& model, const ModelParams& params, const Grid& grid,
                      std::optional<double> jump_at = std::nullopt) {
    const double x0 = jump_at.value_or(0.5 * grid.L);
    std::vector<double> u(static_cast<std::size_t>(grid.J()));
    for (int j = 0; j < grid.J(); ++j) u[static_cast<std::size_t>(j)] = grid.x(j) < x0 ? 1.0 : 0.0;
    return init_from_profile(kind, model, params, std::move(u));
}

/// u^{n+1} - dt v^{n+1} = u^n,
/// -alpha Lap u^{n+1} + (1+beta) v^{n+1} = v^n + beta f(u^n) + sigma beta f'(u^n) v^n.
/// Eliminating u^{n+1} leaves one tridiagonal solve for v^{n+1}.
template <ReactionSource R>
void step_first_order(SimState& st, const R& model, const ModelParams& params, const Grid& grid,
                      SchemeMatrices& mats) {
    if (st.kind != SchemeKind::FirstOrder || mats.kind != SchemeKind::FirstOrder)
        throw WrongRegime("step_first_order on a non first-order state");
    auto& rhs = mats.scratch;
    const std::size_t n = st.u.size();
    rhs.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        double b = st.v[j] + mats.beta * model.f(st.u[j]) + mats.alpha * detail::laplacian(st.u, j);
        if (params.sigma != 0.0) b += params.sigma * mats.beta * model.df(st.u[j]) * st.v[j];
        rhs[j] = b;
    }
    mats.tridiagonal->solve(rhs);
    for (std::size_t j = 0; j < n; ++j) {
        st.v[j] = rhs[j];
        st.u[j] += grid.dt * rhs[j];
    }
    ++st.step;
    st.t = static_cast<double>(st.step) * grid.dt;
    detail::check_finite(st.u, st.step, "u");
    detail::check_finite(st.v, st.step, "v");
}

/// (1+beta) u^{n+1} - beta v^{n+1} = u^n + beta sigma f(u^n),
/// -alpha Lap u^{n+1} + v^{n+1} = v^n + dt f(u^n).
template <ReactionSource R>
void step_lienard(SimState& st, const R& model, const ModelParams& params, const Grid& grid,
                  SchemeMatrices& mats) {
    if (st.kind != SchemeKind::Lienard || mats.kind != SchemeKind::Lienard)
        throw WrongRegime("step_lienard on a non Lienard state");
    auto& rhs = mats.scratch;
    const std::size_t n = st.u.size();
    rhs.resize(n);
    // st.v temporarily holds the second right-hand side.
    for (std::size_t j = 0; j < n; ++j) {
        const double fu = model.f(st.u[j]);
        const double r1 = st.u[j] + mats.beta * params.sigma * fu;
        st.v[j] += grid.dt * fu;
        rhs[j] = r1 + mats.beta * st.v[j];
    }
    mats.tridiagonal->solve(rhs);
    for (std::size_t j = 0; j < n; ++j) st.u[j] = rhs[j];
    for (std::size_t j = 0; j < n; ++j) st.v[j] += mats.alpha * detail::laplacian(st.u, j);
    ++st.step;
    st.t = static_cast<double>(st.step) * grid.dt;
    detail::check_finite(st.u, st.step, "u");
    detail::check_finite(st.v, st.step, "v");
}

/// Upwind-implicit relaxation step in diagonal variables (r, s), sigma = tau.
template <ReactionSource R>
void step_kinetic(SimState& st, const R& model, const ModelParams& params, const Grid& grid,
                  SchemeMatrices& mats) {
    if (st.kind != SchemeKind::Kinetic || mats.kind != SchemeKind::Kinetic)
        throw WrongRegime("step_kinetic on a non kinetic state");
    validate_scheme(SchemeKind::Kinetic, params);
    auto& rhs = mats.scratch;
    const std::size_t n = st.u.size();
    rhs.resize(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        const double half_source = 0.5 * grid.dt * model.f(st.u[j]);
        rhs[2 * j] = st.r[j] + half_source;
        rhs[2 * j + 1] = st.s[j] + half_source;
    }
    mats.banded->solve(rhs);
    for (std::size_t j = 0; j < n; ++j) {
        st.r[j] = rhs[2 * j];
        st.s[j] = rhs[2 * j + 1];
        st.u[j] = st.r[j] + st.s[j];
    }
    ++st.step;
    st.t = static_cast<double>(st.step) * grid.dt;
    detail::check_finite(st.r, st.step, "r");
    detail::check_finite(st.s, st.step, "s");
}

template <ReactionSource R>
void step(SimState& st, const R& model, const ModelParams& params, const Grid& grid,
          SchemeMatrices& mats) {
    switch (st.kind) {
        case SchemeKind::FirstOrder: return step_first_order(st, model, params, grid, mats);
        case SchemeKind::Lienard: return step_lienard(st, model, params, grid, mats);
        case SchemeKind::Kinetic: return step_kinetic(st, model, params, grid, mats);
    }
}

/// Time derivative of u as reconstructed from each scheme's variables.
template <ReactionSource R>
std::vector<double> time_derivative(const SimState& st, const R& model, const ModelParams& params,
                                    const Grid& grid) {
    const std::size_t n = st.u.size();
    std::vector<double> ut(n);
    switch (st.kind) {
        case SchemeKind::FirstOrder:
            ut = st.v;
            break;
        case SchemeKind::Lienard:
            for (std::size_t j = 0; j < n; ++j)
                ut[j] = (st.v[j] - st.u[j] + params.sigma * model.f(st.u[j])) / params.tau;
            break;
        case SchemeKind::Kinetic: {
            // u_t = f(u) - d/dx flux, flux = rho (s - r); walls reflect the flux oddly.
            const double rho = std::sqrt(params.a / params.tau);
            auto flux = [&](std::ptrdiff_t j) {
                const auto last = static_cast<std::ptrdiff_t>(n) - 1;
                if (j < 0) return -rho * (st.s[0] - st.r[0]);
                if (j > last) return -rho * (st.s[n - 1] - st.r[n - 1]);
                return rho * (st.s[static_cast<std::size_t>(j)] - st.r[static_cast<std::size_t>(j)]);
            };
            for (std::size_t j = 0; j < n; ++j) {
                const auto jj = static_cast<std::ptrdiff_t>(j);
                ut[j] = model.f(st.u[j]) - (flux(jj + 1) - flux(jj - 1)) / (2.0 * grid.dx);
            }
            break;
        }
    }
    return ut;
}

/// dx * sum_j [ tau/2 (u_t)_j^2 + a/2 ((u_{j+1} - u_j)/dx)^2 + W(u_j) ].
template <ReactionSource R>
double discrete_energy(const SimState& st, const R& model, const ModelParams& params,
                       const Grid& grid) {
    const auto ut = time_derivative(st, model, params, grid);
    double sum = 0.0;
    for (std::size_t j = 0; j < st.u.size(); ++j) {
        sum += 0.5 * params.tau * ut[j] * ut[j] + model.W(st.u[j]);
        if (j + 1 < st.u.size()) {
            const double g = (st.u[j + 1] - st.u[j]) / grid.dx;
            sum += 0.5 * params.a * g * g;
        }
    }
    return grid.dx * sum;
}

struct Frame {
    long step = 0;
    double t = 0.0;
    std::vector<double> u;
};

struct RunResult {
    std::vector<Frame> frames;
    SimState final_state;
};

/// Steps corresponding to 0.1 time units, at least one.
long default_frame_stride(const Grid& grid);

/// Evolves `initial` over grid.N() steps with matrices factored once, recording
/// the initial frame, one frame every frame_stride steps and the final frame.
template <ReactionSource R>
RunResult run_from(SimState initial, const R& model, const ModelParams& params, const Grid& grid,
                   long frame_stride) {
    grid.validate();
    validate_scheme(initial.kind, params);
    if (frame_stride < 1) throw ValidationError("frame stride must be >= 1");
    auto mats = assemble_matrices(initial.kind, params, grid);
    RunResult out;
    out.frames.push_back({initial.step, initial.t, initial.u});
    const long steps = grid.N();
    for (long n = 0; n < steps; ++n) {
        step(initial, model, params, grid, mats);
        if (initial.step % frame_stride == 0 || n + 1 == steps)
            out.frames.push_back({initial.step, initial.t, initial.u});
    }
    out.final_state = std::move(initial);
    return out;
}

template <ReactionSource R>
RunResult run(SchemeKind kind, const R& model, const ModelParams& params, const Grid& grid,
              long frame_stride) {
    return run_from(init_riemann(kind, model, params, grid), model, params, grid, frame_stride);
}

}  // namespace hyperfront
