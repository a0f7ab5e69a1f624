#pragma once

#include "starris/channel.hpp"
#include "starris/rates.hpp"

namespace starris {

struct RelayPower {
    double p2 = 0.0;
    bool clamped = false;
};

// Relay transmit power that maximizes the full-duplex DF rate under the
// average-power constraint p1 + p2 = 2p. Closed form: the in-range root of
// the hop-balance quadratic, evaluated cancellation-free; the same
// expression covers the degenerate case beta_rd*beta_li == beta_sr*beta_sd
// where the quadratic collapses to a linear equation. Outside [0, 2p] the
// result is clamped and flagged rather than rejected, so sweeps can
// proceed past pathological geometries.
RelayPower optimal_p2_fd(double p, const ChannelGains& gains,
                         Zone relay_zone = Zone::reflection);

// Optimal half-duplex DF split: p1 = 2p*beta_rd/den, p2 = 2p*(beta_sr -
// beta_sd)/den with den = beta_sr + beta_rd - beta_sd. Throws
// relay_not_beneficial when beta_sr < beta_sd or den <= 0.
PowerSplit hd_power_split(double p, const ChannelGains& gains,
                          Zone relay_zone = Zone::reflection);

// Average power needed for the optimally-split full-duplex DF link to
// reach target_rate bit/s/Hz. Inverts the optimal-rate expression through
// a quadratic in p; infeasible targets (negative discriminant or
// non-positive root) raise a model_error.
double required_power_fd(double target_rate, const ChannelGains& gains,
                         Zone relay_zone = Zone::reflection);

}  // namespace starris
