#pragma once

#include "starris/channel.hpp"
#include "starris/rates.hpp"

namespace starris {

struct SecrecyReport {
    double s_siso = 0.0;
    double s_hd_df = 0.0;
    double s_fd_df = 0.0;
    double s_ris = 0.0;
    double s_star_ref = 0.0;
    double s_star_tra = 0.0;
};

// How an informed eavesdropper combines the source and relay phases of
// HD-DF: the default sums the two SNRs; `strongest_phase` keeps only the
// better phase and is exposed for sensitivity checks.
enum class HdEavesdropperModel { informed_sum, strongest_phase };

// All secrecy rates are max(0, legitimate - eavesdropper) with the clamp
// applied after the full-precision subtraction.

double secrecy_siso(double p, double beta_sd, double beta_se, double sigma2);

double secrecy_hd_df(double p, const ChannelGains& gains,
                     Zone relay_zone = Zone::reflection,
                     HdEavesdropperModel model = HdEavesdropperModel::informed_sum);

double secrecy_fd_df(double p, const ChannelGains& gains,
                     Zone relay_zone = Zone::reflection);

// The surface phases are aligned to the legitimate user, so the
// eavesdropper sees the surface beam as full-strength coherent
// interference. This is the pessimistic-for-the-eavesdropper reading of
// the model; see README.
double secrecy_ris(double p, const SurfaceConfig& surface, const ChannelGains& gains);

double secrecy_star(Zone zone, double p, const SurfaceConfig& surface,
                    const ChannelGains& gains);

// Zone-level primitive with an explicit element count.
double secrecy_star_zone(Zone zone, double p, double n_zone, const SurfaceConfig& surface,
                         const ChannelGains& gains);

}  // namespace starris
