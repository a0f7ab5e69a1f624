// Test-side oracles, deliberately written from scratch against the model
// definitions rather than through the library's code paths.

#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "starris/channel.hpp"
#include "starris/scenario.hpp"

namespace oracle {

inline double rel_err(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return 0.0;
    return std::abs(a - b) / scale;
}

// Full-duplex DF hop SINRs at an explicit split, straight from the model.
inline double fd_hop1(double p1, double p2, double b_sr, double b_li, double s2) {
    return p1 * b_sr / (p2 * b_li + s2);
}
inline double fd_hop2(double p1, double p2, double b_rd, double b_sd, double s2) {
    return p2 * b_rd / (p1 * b_sd + s2);
}

// argmax over p2 in [0, 2p] of min(hop1, hop2): coarse grid scan to bracket
// the best cell, then bisection on the hop crossing (hop1 falls, hop2
// rises, so the max of the min is where they meet or at a boundary).
inline double best_p2_grid_bisect(double p, double b_sr, double b_rd, double b_sd, double b_li,
                                  double s2, int grid_points = 1000001) {
    const double hi = 2.0 * p;
    double best_val = -1.0, best_p2 = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double p2 = hi * i / (grid_points - 1);
        const double p1 = hi - p2;
        const double v = std::min(fd_hop1(p1, p2, b_sr, b_li, s2), fd_hop2(p1, p2, b_rd, b_sd, s2));
        if (v > best_val) {
            best_val = v;
            best_p2 = p2;
        }
    }
    const double cell = hi / (grid_points - 1);
    double lo = std::max(0.0, best_p2 - cell);
    double up = std::min(hi, best_p2 + cell);
    const auto diff = [&](double p2) {
        const double p1 = hi - p2;
        return fd_hop1(p1, p2, b_sr, b_li, s2) - fd_hop2(p1, p2, b_rd, b_sd, s2);
    };
    if (diff(lo) < 0.0 || diff(up) > 0.0) return best_p2;  // crossing not bracketed: boundary max
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + up);
        (diff(mid) > 0.0 ? lo : up) = mid;
    }
    return 0.5 * (lo + up);
}

// Smallest n in [1, n_max] whose rate beats relay_rate, or 0 when none do.
template <class RateAt>
long first_n_beating(double relay_rate, RateAt&& rate_at, long n_max = 5000) {
    for (long n = 1; n <= n_max; ++n)
        if (rate_at(static_cast<double>(n)) > relay_rate) return n;
    return 0;
}

// Geometry-level scenario sampler used by the randomized suites. Keeps the
// perpendicular offsets >= 10 m so every surface link stays inside the
// path-loss model's validity floor.
inline starris::Scenario random_scenario(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    starris::Scenario s;
    s.geometry.d_sr = 40.0 + 110.0 * u(rng);
    const double dsd = std::max(15.0, s.geometry.d_sr + 60.0 * (u(rng) - 0.5));
    s.geometry.d_sd_r = dsd;
    s.geometry.d_sd_t = std::max(15.0, dsd + 20.0 * (u(rng) - 0.5));
    s.geometry.d_se_r = dsd + 5.0 + 40.0 * u(rng);
    s.geometry.d_se_t = dsd + 5.0 + 40.0 * u(rng);
    s.geometry.d_v = 10.0 + 10.0 * u(rng);
    s.geometry.d_v_e = 10.0 + 10.0 * u(rng);
    s.p_dbm = 5.0 + 25.0 * u(rng);
    s.beta_li_db = -140.0 + 40.0 * u(rng);
    s.surface.n_ref = 100.0 + 1500.0 * u(rng);
    s.surface.split_k = 0.3 + 0.4 * u(rng);
    s.surface.zeta = 0.35 + 0.5 * u(rng);
    s.surface.alpha_r = 0.7 + 0.3 * u(rng);
    s.surface.alpha_t = 0.7 + 0.3 * u(rng);
    s.surface.alpha = 0.7 + 0.3 * u(rng);
    return s;
}

}  // namespace oracle
