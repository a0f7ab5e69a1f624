#pragma once

#include "starris/channel.hpp"
#include "starris/rates.hpp"

namespace starris {

enum class SurfaceScheme { star_ref, star_tra, ris };

// Minimum-element-count result. bound_real is the closed-form right-hand
// side of the strict inequality N > bound; n_min is the smallest integer
// strictly exceeding it (floor(bound)+1, with a direct rate comparison to
// break near-integer ties). For the STAR schemes both values count
// elements of one zone, not the whole surface; divide by K or 1-K for a
// total-surface figure. always_wins means the surface beats the relay at
// any N >= 1.
struct ThresholdResult {
    double bound_real = 0.0;
    long n_min = 1;
    bool always_wins = false;
};

// Elements needed for a STAR zone to outrate half-duplex DF relaying.
// zeta = 0 (reflection) or zeta = 1 (transmission) leaves the zone without
// signal and raises a model_error.
ThresholdResult min_elements_star_vs_hd(Zone zone, double p, const SurfaceConfig& surface,
                                        const ChannelGains& gains,
                                        Zone relay_zone = Zone::reflection);

// Same comparison for the conventional reflect-only surface (full element
// count, no zeta split).
ThresholdResult min_elements_ris_vs_hd(double p, const SurfaceConfig& surface,
                                       const ChannelGains& gains,
                                       Zone relay_zone = Zone::reflection);

// Elements needed to outrate full-duplex DF relaying at its optimal power
// split.
ThresholdResult min_elements_vs_fd(SurfaceScheme scheme, double p, const SurfaceConfig& surface,
                                   const ChannelGains& gains,
                                   Zone relay_zone = Zone::reflection);

}  // namespace starris
