#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hyperfront/estimators.hpp"

using namespace hyperfront;

namespace {

// Decreasing ramp from 1 to 0 centred at `centre` with half-width `w` cells.
std::vector<double> ramp(int J, double centre, double w) {
    std::vector<double> u(static_cast<std::size_t>(J));
    for (int j = 0; j < J; ++j) {
        const double s = (j - centre) / (2.0 * w) + 0.5;
        u[static_cast<std::size_t>(j)] = std::clamp(1.0 - s, 0.0, 1.0);
    }
    return u;
}

std::vector<double> shifted(const std::vector<double>& u, int k) {
    std::vector<double> out(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
        const long src = static_cast<long>(j) - k;
        out[j] = src < 0 ? u.front() : src >= static_cast<long>(u.size()) ? u.back()
                                                                          : u[static_cast<std::size_t>(src)];
    }
    return out;
}

}  // namespace

TEST_CASE("crossing index on a step") {
    const std::vector<double> u{1, 1, 1, 0.2, 0, 0};
    CHECK(crossing_index(u, 0.5) == 3);
    CHECK(crossing_index(u, 0.1) == 4);
    CHECK(crossing_index(u, 1.0) == 3);  // first value strictly below theta
}

TEST_CASE("crossing index errors") {
    CHECK_THROWS_AS(crossing_index(std::vector<double>{1, 1, 1}, 0.5), NoCrossing);
    CHECK_THROWS_AS(crossing_index(std::vector<double>{0, 0, 0}, 0.5), NoCrossing);
    const std::vector<double> bumpy{1, 1, 0, 0, 0, 0, 0, 0.9, 0};
    CHECK_THROWS_AS(crossing_index(bumpy, 0.5), MultipleCrossings);
    // a wiggle inside the band is tolerated
    const std::vector<double> wiggle{1, 1, 0.4, 0.6, 0, 0, 0, 0};
    CHECK(crossing_index(wiggle, 0.5) == 2);
}

TEST_CASE("scout and spot: identical frames give zero") {
    const auto u = ramp(200, 80.0, 5.0);
    const auto est = scout_and_spot(u, u, 0.25, 0.1, 1e-3, 100);
    CHECK(est.value == 0.0);
    CHECK(est.quanta == 0);
    CHECK(est.quantum == doctest::Approx(1.0));
}

TEST_CASE("scout and spot: a k-cell shift reads k quanta") {
    const auto u = ramp(300, 80.0, 5.0);
    for (int k : {1, 7, 40}) {
        const auto est = scout_and_spot(u, shifted(u, k), 0.3, 0.1, 1e-3, 1000);
        CHECK(est.quanta == k);
        CHECK(est.value == doctest::Approx(k * 0.1 / (1000 * 1e-3)));
    }
    const auto back = scout_and_spot(u, shifted(u, -6), 0.3, 0.1, 1e-3, 1000);
    CHECK(back.value < 0.0);
    CHECK(back.quanta == -6);
}

TEST_CASE("scout and spot values are always whole quanta") {
    std::mt19937 rng(20261019);
    std::uniform_real_distribution<double> centre(40.0, 120.0), shift(-20.0, 20.0), width(1.0, 8.0);
    std::uniform_int_distribution<long> p(1, 5000);
    for (int trial = 0; trial < 100; ++trial) {
        const double c = centre(rng), w = width(rng);
        const auto a = ramp(300, c, w);
        const auto b = ramp(300, c + shift(rng), w);
        const long pp = p(rng);
        const auto est = scout_and_spot(a, b, 0.5, 0.1, 1e-3, pp);
        const double q = 0.1 / (static_cast<double>(pp) * 1e-3);
        CHECK(est.quantum == doctest::Approx(q));
        CHECK(est.value / q == doctest::Approx(std::round(est.value / q)).epsilon(1e-12));
    }
}

TEST_CASE("scout and spot rejects bad inputs") {
    const auto u = ramp(100, 50.0, 3.0);
    CHECK_THROWS_AS(scout_and_spot(u, u, 0.5, 0.1, 1e-3, 0), ValidationError);
    CHECK_THROWS_AS(scout_and_spot(u, u, 1.0, 0.1, 1e-3, 10), ValidationError);
}

TEST_CASE("LeVeque-Yee steps telescope") {
    std::vector<std::vector<double>> frames;
    for (int n = 0; n < 6; ++n) frames.push_back(ramp(200, 60.0 + 1.7 * n + 0.3 * n * n, 4.0));
    const double dx = 0.1, dt = 0.05;
    double sum = 0.0;
    for (int n = 0; n + 1 < 6; ++n) sum += leveque_yee_step(frames[n], frames[n + 1], -1.0, dx, dt);
    const double direct = leveque_yee_step(frames[0], frames[5], -1.0, dx, dt);
    CHECK(sum == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("LeVeque-Yee recovers exact translation") {
    const double dx = 0.1, dt = 1e-3;
    const auto a = ramp(400, 100.0, 10.0);
    const auto b = ramp(400, 103.0, 10.0);  // three cells to the right
    CHECK(leveque_yee_step(a, b, -1.0, dx, dt) == doctest::Approx(3 * dx / dt).epsilon(1e-12));
    CHECK(leveque_yee_step(b, a, -1.0, dx, dt) == doctest::Approx(-3 * dx / dt).epsilon(1e-12));
    // increasing fronts use jump = +1 and keep the sign convention
    std::vector<double> ia(a.size()), ib(b.size());
    for (std::size_t j = 0; j < a.size(); ++j) ia[j] = 1.0 - a[j], ib[j] = 1.0 - b[j];
    CHECK(leveque_yee_step(ia, ib, 1.0, dx, dt) == doctest::Approx(3 * dx / dt).epsilon(1e-12));
    CHECK_THROWS_AS(leveque_yee_step(a, b, 0.0, dx, dt), ZeroJump);
}

TEST_CASE("LeVeque-Yee is covariant under sub-cell translation") {
    const double dx = 0.1, dt = 1e-3;
    const auto a = ramp(400, 100.0, 10.0);
    const auto b = ramp(400, 100.37, 10.0);
    CHECK(leveque_yee_step(a, b, -1.0, dx, dt) == doctest::Approx(0.37 * dx / dt).epsilon(1e-12));
}

TEST_CASE("LeVeque-Yee series over a translating ramp") {
    const double dx = 0.1, dt = 1e-2;
    const double speed = 0.4;  // space units per time unit
    std::vector<Frame> frames;
    for (int n = 0; n <= 200; n += 10) {
        const double t = n * dt;
        frames.push_back({n, t, ramp(400, 100.0 + speed * t / dx, 6.0)});
    }
    const auto est = leveque_yee_series(frames, -1.0, dx, 1.0, 2.0);
    CHECK(est.value == doctest::Approx(speed).epsilon(1e-12));
    CHECK(est.stddev < 1e-12);
    CHECK(est.samples == 10);
    CHECK(est.t_begin == doctest::Approx(1.0));
    CHECK(est.t_end == doctest::Approx(2.0));
    CHECK_THROWS_AS(leveque_yee_series(frames, -1.0, dx, 5.0, 6.0), ValidationError);
}
