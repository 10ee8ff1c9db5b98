#include <doctest.h>

#include <cmath>
#include <vector>

#include "hyperfront/errors.hpp"
#include "hyperfront/exact_speeds.hpp"

using namespace hyperfront;

TEST_CASE("parabolic cubic speed") {
    CHECK(parabolic_cubic_speed(1.0, 1.0, 0.5) == 0.0);
    CHECK(parabolic_cubic_speed(1.0, 1.0, 0.25) == doctest::Approx(0.3535534).epsilon(2e-7));
    CHECK(parabolic_cubic_speed(1.0, 1.0, 0.125) == doctest::Approx(0.5303301).epsilon(2e-7));
    CHECK(parabolic_cubic_speed(1.0, 1.0, 0.7) < 0.0);
}

TEST_CASE("damped cubic speed reproduces reference values") {
    const std::vector<std::pair<double, double>> table = {
        {0.05, 0.5368950}, {0.10, 0.4923660}, {0.15, 0.4436070}, {0.20, 0.3905667},
        {0.25, 0.3333333}, {0.30, 0.2721655}, {0.35, 0.2075143}, {0.40, 0.1400280},
        {0.45, 0.0705346}};
    for (auto [alpha, c] : table) CHECK(std::abs(damped_cubic_speed(1.0, 1.0, alpha, 1.0) - c) < 1e-7);
    CHECK(damped_cubic_speed(1.0, 1.0, 0.25, 0.0) == parabolic_cubic_speed(1.0, 1.0, 0.25));
}

TEST_CASE("damped cubic speed solves its defining relation") {
    for (double a : {0.5, 1.0, 2.0})
        for (double kappa : {0.5, 1.0, 3.0})
            for (double alpha : {0.05, 0.2, 0.45})
                for (double tau : {0.0, 0.3, 1.0, 4.0}) {
                    const double c = damped_cubic_speed(a, kappa, alpha, tau);
                    const double rhs = std::sqrt(2.0 * (a - tau * c * c) * kappa) * (0.5 - alpha);
                    CHECK(std::abs(c - rhs) < 1e-12);
                    CHECK(a - tau * c * c > 0.0);
                    if (tau > 0.0) CHECK(c < parabolic_cubic_speed(a, kappa, alpha));
                }
}

TEST_CASE("piecewise-affine exact speed") {
    CHECK(std::abs(pwl_speed(1.0, 1.0, 0.125, 0.0, 1.0) - 0.9149914) < 1e-7);
    CHECK(std::abs(pwl_speed(1.0, 1.0, 0.25, 0.0, 1.0) - 0.7559289) < 1e-7);
    CHECK(std::abs(pwl_speed(1.0, 1.0, 0.375, 0.0, 1.0) - 0.4588315) < 1e-7);
    // (1+1)^2 * 0.1875 + 0.25 = 1
    CHECK(pwl_speed(1.0, 1.0, 0.25, 1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(pwl_speed(1.0, 1.0, 0.5, 0.3, 1.0) == 0.0);
}

TEST_CASE("piecewise-affine speed decreases in sigma and tau and stays below the parabolic one") {
    for (double alpha : {0.1, 0.3, 0.45, 0.6, 0.9}) {
        const double c0 = pwl_speed(1.0, 1.0, alpha, 0.0, 0.0);
        double prev_sigma = c0;
        for (int i = 1; i <= 10; ++i) {
            const double tau = 0.2 * i;
            const double c_tau = pwl_speed(1.0, 1.0, alpha, 0.0, tau);
            CHECK(std::abs(c_tau) < std::abs(c0));
            CHECK((c_tau - c0) / c0 < 0.0);
            CHECK(1.0 - tau * c_tau * c_tau > 0.0);
            const double c_sigma = pwl_speed(1.0, 1.0, alpha, tau / 2.0, 2.0);
            CHECK(std::abs(c_sigma) < std::abs(prev_sigma));
            prev_sigma = c_sigma;
        }
    }
}

TEST_CASE("closed-form profile") {
    CHECK(parabolic_cubic_profile(3.0, 1.0, 1.0, 3.0) == 0.5);
    CHECK(parabolic_cubic_profile(1e3, 1.0, 1.0) < 1e-300);
    CHECK(parabolic_cubic_profile(1.0, 1.0, 2.0) == doctest::Approx(1.0 / (1.0 + std::exp(1.0))).epsilon(1e-15));
    double prev = 1.0;
    for (int i = -50; i <= 50; ++i) {
        const double phi = parabolic_cubic_profile(0.2 * i, 1.0, 1.0);
        CHECK(phi < prev);
        prev = phi;
    }
}

TEST_CASE("equal-depth profile matches the explicit logistic front") {
    std::vector<double> xi;
    for (int i = -40; i <= 40; ++i) xi.push_back(0.25 * i);
    const auto phi = equal_depth_profile(ReactionModel::cubic(1.0, 0.5), 1.0, xi);
    for (std::size_t i = 0; i < xi.size(); ++i)
        CHECK(std::abs(phi[i] - 1.0 / (1.0 + std::exp(std::sqrt(0.5) * xi[i]))) < 1e-8);
    CHECK(phi[40] == 0.5);
}

TEST_CASE("equal-depth profile steepens by sqrt(kappa)") {
    std::vector<double> xi{-3.0, -1.0, 0.5, 2.0};
    std::vector<double> xi_scaled;
    for (double x : xi) xi_scaled.push_back(x * std::sqrt(2.0));
    const auto k2 = equal_depth_profile(ReactionModel::cubic(2.0, 0.5), 1.0, xi);
    const auto k1 = equal_depth_profile(ReactionModel::cubic(1.0, 0.5), 1.0, xi_scaled);
    for (std::size_t i = 0; i < xi.size(); ++i) CHECK(std::abs(k2[i] - k1[i]) < 1e-9);
}

TEST_CASE("equal-depth profile for the piecewise-affine model is monotone") {
    std::vector<double> xi;
    for (int i = -20; i <= 20; ++i) xi.push_back(0.5 * i);
    const auto phi = equal_depth_profile(ReactionModel::piecewise_affine(1.0, 0.5), 1.0, xi);
    for (std::size_t i = 1; i < phi.size(); ++i) CHECK(phi[i] < phi[i - 1]);
}

TEST_CASE("equal-depth profile rejects unequal wells") {
    std::vector<double> xi{0.0};
    CHECK_THROWS_AS(equal_depth_profile(ReactionModel::cubic(1.0, 0.25), 1.0, xi), NotEqualDepth);
}

TEST_CASE("model parameter validation") {
    CHECK_NOTHROW(ModelParams{1.0, 1.0, 1.0}.validate());
    CHECK_THROWS_AS((ModelParams{1.0, 1.5, 1.0}.validate()), ValidationError);
    CHECK_THROWS_AS((ModelParams{1.0, 0.0, 0.0}.validate()), ValidationError);
}
