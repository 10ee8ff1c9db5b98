#include "hyperfront/estimators.hpp"

#include <cmath>
#include <string>

namespace hyperfront {

int crossing_index(std::span<const double> u, double theta, int band) {
    const int n = static_cast<int>(u.size());
    int j = 0;
    while (j < n && !(u[static_cast<std::size_t>(j)] < theta)) ++j;
    if (j == n) throw NoCrossing("frame stays at or above theta = " + std::to_string(theta));
    if (j == 0) throw NoCrossing("frame starts below theta = " + std::to_string(theta));
    for (int k = j + band + 1; k < n; ++k)
        if (u[static_cast<std::size_t>(k)] >= theta)
            throw MultipleCrossings("frame re-crosses theta = " + std::to_string(theta) +
                                    " at index " + std::to_string(k) + " after " +
                                    std::to_string(j));
    return j;
}

SpeedEstimate scout_and_spot(std::span<const double> frame_a, std::span<const double> frame_b,
                             double theta, double dx, double dt, long p) {
    if (!(theta > 0.0 && theta < 1.0)) throw ValidationError("theta must lie in (0,1)");
    if (p < 1) throw ValidationError("scout & spot needs p >= 1");
    const int ja = crossing_index(frame_a, theta);
    const int jb = crossing_index(frame_b, theta);
    SpeedEstimate e;
    e.method = EstimatorMethod::ScoutSpot;
    e.quantum = dx / (static_cast<double>(p) * dt);
    e.quanta = jb - ja;
    e.value = static_cast<double>(e.quanta) * e.quantum;
    e.samples = 1;
    return e;
}

double leveque_yee_step(std::span<const double> u_n, std::span<const double> u_np1, double jump,
                        double dx, double dt) {
    if (std::abs(jump) < 1e-12) throw ZeroJump("LeVeque-Yee needs distinct asymptotic states");
    if (u_n.size() != u_np1.size()) throw ValidationError("frames differ in size");
    double sum = 0.0;
    for (std::size_t j = 0; j < u_n.size(); ++j) sum += u_n[j] - u_np1[j];
    return sum / jump * dx / dt;
}

SpeedEstimate leveque_yee_series(std::span<const Frame> frames, double jump, double dx,
                                 double t_begin, double t_end) {
    if (std::abs(jump) < 1e-12) throw ZeroJump("LeVeque-Yee needs distinct asymptotic states");
    const double slack = 1e-9 * std::max(1.0, std::abs(t_end));
    std::vector<const Frame*> inside;
    for (const auto& f : frames)
        if (f.t >= t_begin - slack && f.t <= t_end + slack) inside.push_back(&f);
    if (inside.size() < 2)
        throw ValidationError("LeVeque-Yee series needs at least two frames in the window");

    std::vector<double> values;
    values.reserve(inside.size() - 1);
    for (std::size_t i = 0; i + 1 < inside.size(); ++i)
        values.push_back(leveque_yee_step(inside[i]->u, inside[i + 1]->u, jump, dx,
                                          inside[i + 1]->t - inside[i]->t));
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size());

    SpeedEstimate e;
    e.method = EstimatorMethod::LeVequeYee;
    e.value = mean;
    e.stddev = std::sqrt(var);
    e.samples = static_cast<int>(values.size());
    e.t_begin = inside.front()->t;
    e.t_end = inside.back()->t;
    return e;
}

}  // namespace hyperfront
