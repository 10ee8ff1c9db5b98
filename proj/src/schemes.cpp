#include "hyperfront/schemes.hpp"

#include <cmath>

namespace hyperfront {

std::string to_string(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::FirstOrder: return "first-order";
        case SchemeKind::Lienard: return "lienard";
        case SchemeKind::Kinetic: return "kinetic";
    }
    return "?";
}

SchemeKind scheme_from_string(const std::string& name) {
    if (name == "first-order" || name == "first_order" || name == "firstorder")
        return SchemeKind::FirstOrder;
    if (name == "lienard") return SchemeKind::Lienard;
    if (name == "kinetic") return SchemeKind::Kinetic;
    throw ConfigError("unknown scheme '" + name + "' (expected first-order, lienard or kinetic)");
}

void Grid::validate() const {
    if (!(dx > 0.0 && dt > 0.0 && L > 0.0 && T > 0.0))
        throw ValidationError("grid spacings and extents must be positive");
    if (J() < 3) throw ValidationError("grid needs at least 3 nodes");
}

void validate_scheme(SchemeKind kind, const ModelParams& params) {
    params.validate();
    if (!(params.tau > 0.0)) throw WrongRegime("the IMEX schemes need tau > 0");
    if (kind == SchemeKind::Kinetic && params.sigma != params.tau)
        throw WrongRegime("kinetic scheme requires sigma == tau");
}

namespace {

TridiagonalLU neumann_tridiagonal(int n, double centre, double coupling) {
    // centre + 2 coupling on the diagonal, -coupling off it; mirror ghosts
    // fold one coupling back into the first and last rows.
    const auto un = static_cast<std::size_t>(n);
    std::vector<double> diag(un, centre + 2.0 * coupling);
    diag.front() = centre + coupling;
    diag.back() = centre + coupling;
    std::vector<double> off(un - 1, -coupling);
    return TridiagonalLU(off, std::move(diag), off);
}

}  // namespace

SchemeMatrices assemble_matrices(SchemeKind kind, const ModelParams& params, const Grid& grid) {
    validate_scheme(kind, params);
    grid.validate();
    const int J = grid.J();
    SchemeMatrices m;
    m.kind = kind;
    switch (kind) {
        case SchemeKind::FirstOrder:
            m.alpha = params.a * grid.dt / (params.tau * grid.dx * grid.dx);
            m.beta = grid.dt / params.tau;
            m.tridiagonal = neumann_tridiagonal(J, 1.0 + m.beta, m.alpha * grid.dt);
            break;
        case SchemeKind::Lienard:
            m.alpha = params.a * grid.dt / (grid.dx * grid.dx);
            m.beta = grid.dt / params.tau;
            m.tridiagonal = neumann_tridiagonal(J, 1.0 + m.beta, m.alpha * m.beta);
            break;
        case SchemeKind::Kinetic: {
            m.rho = std::sqrt(params.a / params.tau);
            m.alpha = m.rho * grid.dt / grid.dx;
            m.beta = grid.dt / (2.0 * params.tau);
            // Unknowns interleaved as (r_0, s_0, r_1, s_1, ...).
            BandedLU A(2 * J, 2, 2);
            const double d = 1.0 + m.alpha + m.beta;
            for (int j = 0; j < J; ++j) {
                const int r = 2 * j, s = 2 * j + 1;
                A.set(r, r, d);
                A.set(r, s, -m.beta);
                if (j + 1 < J)
                    A.set(r, r + 2, -m.alpha);
                else
                    A.add(r, s, -m.alpha);  // right wall: incoming r equals outgoing s
                A.set(s, s, d);
                A.set(s, r, -m.beta);
                if (j > 0)
                    A.set(s, s - 2, -m.alpha);
                else
                    A.add(s, r, -m.alpha);  // left wall: incoming s equals outgoing r
            }
            A.factor();
            m.banded = std::move(A);
            break;
        }
    }
    return m;
}

long default_frame_stride(const Grid& grid) {
    return std::max(1L, std::lround(0.1 / grid.dt));
}

}  // namespace hyperfront
