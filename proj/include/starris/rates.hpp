#pragma once

#include "starris/channel.hpp"

namespace starris {

// Element counts are real-valued so K and zeta sweeps stay smooth;
// rounding to integers happens only in the threshold computations.
struct SurfaceConfig {
    double n_ref = 100.0;  // total element count
    double split_k = 0.5;  // fraction of elements assigned to reflection
    double zeta = 0.7071067811865475;  // reflection-to-transmission power ratio
    double alpha_r = 1.0;
    double alpha_t = 1.0;
    double alpha = 1.0;  // amplitude of the conventional (reflect-only) surface

    double n_r() const { return split_k * n_ref; }
    double n_t() const { return (1.0 - split_k) * n_ref; }
    // Effective per-element amplitude seen by a zone: alpha_r*zeta on the
    // reflection side, alpha_t*sqrt(1-zeta^2) on the transmission side.
    double zone_coef(Zone z) const;

    void validate() const;
};

struct PowerSplit {
    double p1 = 0.0;     // source transmit power, W
    double p2 = 0.0;     // relay transmit power, W
    double p_avg = 0.0;  // (p1 + p2) / 2
    bool clamped = false;
};

struct RateReport {
    double r_siso = 0.0;
    double r_hd_df = 0.0;
    double r_fd_df = 0.0;
    double r_ris = 0.0;
    double r_star_ref = 0.0;
    double r_star_tra = 0.0;
};

// Coherent-combining SNR shared by the RIS and STAR expressions:
// p * (sqrt(beta_direct) + n*coef*sqrt(beta_sr*beta_rd))^2 / sigma2.
// Both routes go through here so the zeta=1 collapse is bit-exact.
double surface_snr(double p, double beta_direct, double n_times_coef,
                   double beta_sr, double beta_rd, double sigma2);

double rate_siso(double p, double beta_sd, double sigma2);

// Repetition-coded half-duplex DF with the optimal power split already
// substituted. Requires beta_sr >= beta_sd and beta_sr + beta_rd > beta_sd
// (throws relay_not_beneficial otherwise).
double rate_hd_df(double p, const ChannelGains& gains, Zone relay_zone = Zone::reflection);

// Full-duplex DF at an explicit power split.
double rate_fd_df(const PowerSplit& split, const ChannelGains& gains,
                  Zone relay_zone = Zone::reflection);

// Full-duplex DF at the optimal split; `clamped`, when given, reports
// whether the closed-form relay power had to be clamped into [0, 2p].
double rate_fd_df_opt(double p, const ChannelGains& gains,
                      Zone relay_zone = Zone::reflection, bool* clamped = nullptr);

// Conventional reflect-only surface with all n_ref elements serving the
// reflection-zone destination.
double rate_ris(double p, const SurfaceConfig& surface, const ChannelGains& gains);

double rate_star_ref(double p, const SurfaceConfig& surface, const ChannelGains& gains);
double rate_star_tra(double p, const SurfaceConfig& surface, const ChannelGains& gains);

// Zone-level primitive with an explicit element count; the SurfaceConfig
// overloads derive the count from n_ref and split_k.
double rate_star_zone(Zone z, double p, double n_zone, const SurfaceConfig& surface,
                      const ChannelGains& gains);

}  // namespace starris
