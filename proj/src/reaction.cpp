#include "hyperfront/reaction.hpp"

#include <sstream>

#include "hyperfront/errors.hpp"

namespace hyperfront {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ValidationError("alpha must lie in (0,1), got " + std::to_string(alpha));
}

}  // namespace

double CubicReaction::f(double u) const { return kappa * u * (u - alpha) * (1.0 - u); }

double CubicReaction::df(double u) const {
    return kappa * (-3.0 * u * u + 2.0 * (1.0 + alpha) * u - alpha);
}

double CubicReaction::W(double u) const {
    const double u2 = u * u;
    return kappa * (0.25 * u2 * u2 - (1.0 + alpha) * u2 * u / 3.0 + 0.5 * alpha * u2);
}

double PiecewiseAffineReaction::f(double u) const { return u < alpha ? -m * u : m * (1.0 - u); }

double PiecewiseAffineReaction::f(double u, Side side) const {
    if (u == alpha) return side == Side::Below ? -m * u : m * (1.0 - u);
    return f(u);
}

double PiecewiseAffineReaction::df(double u) const {
    if (u == alpha) throw EvaluationAtJump(u);
    return -m;
}

double PiecewiseAffineReaction::df(double, Side) const { return -m; }

double PiecewiseAffineReaction::W(double u) const {
    if (u < alpha) return 0.5 * m * u * u;
    // m alpha^2/2 - int_alpha^u m (1 - s) ds
    return 0.5 * m * alpha * alpha - m * ((u - alpha) - 0.5 * (u * u - alpha * alpha));
}

ReactionModel::ReactionModel(CubicReaction r) : impl_(r) {
    if (!(r.kappa > 0.0)) throw ValidationError("kappa must be positive");
    check_alpha(r.alpha);
}

ReactionModel::ReactionModel(PiecewiseAffineReaction r) : impl_(r) {
    if (!(r.m > 0.0)) throw ValidationError("m must be positive");
    check_alpha(r.alpha);
}

double ReactionModel::f(double u) const {
    return std::visit([u](const auto& r) { return r.f(u); }, impl_);
}

double ReactionModel::df(double u) const {
    return std::visit([u](const auto& r) { return r.df(u); }, impl_);
}

double ReactionModel::W(double u) const {
    return std::visit([u](const auto& r) { return r.W(u); }, impl_);
}

double ReactionModel::d2W(double u) const { return -df(u); }

double ReactionModel::f(double u, Side side) const {
    if (const auto* p = std::get_if<PiecewiseAffineReaction>(&impl_)) return p->f(u, side);
    return f(u);
}

double ReactionModel::d2W(double u, Side side) const {
    if (const auto* p = std::get_if<PiecewiseAffineReaction>(&impl_)) return p->d2W(u, side);
    return d2W(u);
}

double ReactionModel::alpha() const {
    return std::visit([](const auto& r) { return r.alpha; }, impl_);
}

std::string ReactionModel::describe() const {
    std::ostringstream os;
    if (const auto* c = std::get_if<CubicReaction>(&impl_))
        os << "cubic(kappa=" << c->kappa << ", alpha=" << c->alpha << ")";
    else {
        const auto& p = std::get<PiecewiseAffineReaction>(impl_);
        os << "pwl(m=" << p.m << ", alpha=" << p.alpha << ")";
    }
    return os.str();
}

}  // namespace hyperfront
