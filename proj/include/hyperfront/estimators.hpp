#pragma once

#include <span>
#include <vector>

#include "hyperfront/schemes.hpp"

namespace hyperfront {

enum class EstimatorMethod { ScoutSpot, LeVequeYee };

struct SpeedEstimate {
    double value = 0.0;
    EstimatorMethod method = EstimatorMethod::LeVequeYee;
    double quantum = 0.0;  ///< dx / (p dt) for scout & spot, 0 for LeVeque-Yee
    long quanta = 0;       ///< value / quantum (scout & spot)
    double t_begin = 0.0;
    double t_end = 0.0;
    double stddev = 0.0;   ///< spread of per-frame LeVeque-Yee values
    int samples = 0;
};

/// First index where a decreasing front drops below theta: min{ j : u_j < theta }.
/// Throws NoCrossing when the frame never goes from >= theta to < theta, and
/// MultipleCrossings when u climbs back to theta more than `band` cells past
/// the crossing.
int crossing_index(std::span<const double> u, double theta, int band = 3);

/// Level-curve speed (j_b - j_a) dx / (p dt); quantized to multiples of dx/(p dt).
SpeedEstimate scout_and_spot(std::span<const double> frame_a, std::span<const double> frame_b,
                             double theta, double dx, double dt, long p);

/// Space-averaged speed sum_j (u_n - u_np1)_j dx / (jump dt), jump = phi(+inf) - phi(-inf).
double leveque_yee_step(std::span<const double> u_n, std::span<const double> u_np1, double jump,
                        double dx, double dt);

/// Mean and spread of LeVeque-Yee values between consecutive frames with
/// t in [t_begin, t_end].
SpeedEstimate leveque_yee_series(std::span<const Frame> frames, double jump, double dx,
                                 double t_begin, double t_end);

}  // namespace hyperfront
