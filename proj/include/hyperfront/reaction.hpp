#pragma once

#include <string>
#include <variant>

namespace hyperfront {

/// Which one-sided limit to take at a discontinuity of the reaction.
enum class Side { Below, Above };

/// f(u) = kappa * u * (u - alpha) * (1 - u).
struct CubicReaction {
    double kappa = 1.0;
    double alpha = 0.25;

    double f(double u) const;
    double df(double u) const;
    /// Potential W(u) = -int_0^u f, so W(0) = 0.
    double W(double u) const;
    double d2W(double u) const { return -df(u); }
};

/// f(u) = -m u for u < alpha, m (1 - u) for u >= alpha.
///
/// The upward jump of size m at alpha makes f' undefined there; df/d2W throw
/// EvaluationAtJump at u == alpha. Use the Side overloads for one-sided values.
struct PiecewiseAffineReaction {
    double m = 1.0;
    double alpha = 0.25;

    double f(double u) const;
    double f(double u, Side side) const;
    double df(double u) const;
    double df(double u, Side side) const;
    double W(double u) const;
    double d2W(double u) const { return -df(u); }
    double d2W(double u, Side side) const { return -df(u, side); }
};

/// Bistable reaction model: the single source of f, f', W and W''.
class ReactionModel {
public:
    using Variant = std::variant<CubicReaction, PiecewiseAffineReaction>;

    ReactionModel(CubicReaction r);              // NOLINT(google-explicit-constructor)
    ReactionModel(PiecewiseAffineReaction r);    // NOLINT(google-explicit-constructor)

    static ReactionModel cubic(double kappa, double alpha) { return CubicReaction{kappa, alpha}; }
    static ReactionModel piecewise_affine(double m, double alpha) {
        return PiecewiseAffineReaction{m, alpha};
    }

    double f(double u) const;
    double df(double u) const;
    double W(double u) const;
    double d2W(double u) const;

    /// One-sided variants. They coincide with the plain ones for the smooth cubic.
    double f(double u, Side side) const;
    double d2W(double u, Side side) const;

    double alpha() const;
    bool is_cubic() const { return std::holds_alternative<CubicReaction>(impl_); }
    bool has_jump() const { return !is_cubic(); }
    const Variant& variant() const { return impl_; }
    std::string describe() const;

private:
    Variant impl_;
};

inline double eval_f(const ReactionModel& m, double u) { return m.f(u); }
inline double eval_df(const ReactionModel& m, double u) { return m.df(u); }
inline double eval_W(const ReactionModel& m, double u) { return m.W(u); }
inline double eval_d2W(const ReactionModel& m, double u) { return m.d2W(u); }

}  // namespace hyperfront
