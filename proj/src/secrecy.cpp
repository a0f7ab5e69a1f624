#include "starris/secrecy.hpp"

#include <algorithm>
#include <cmath>

#include "starris/power.hpp"
#include "starris/units.hpp"

namespace starris {

namespace {

// Legitimate rate minus eavesdropper rate for a coherent surface beam: the
// beam is phase-aligned to the user, so the eavesdropper sees it as
// full-strength interference. Used by both the RIS and STAR routes so the
// collapse identities hold bit-exactly.
double surface_secrecy(double p, double beta_sd, double n_times_coef, double beta_sr,
                       double beta_rd, double beta_se, double beta_re, double sigma2) {
    const double rate_d = log2_1p(surface_snr(p, beta_sd, n_times_coef, beta_sr, beta_rd, sigma2));
    const double interference = p * (n_times_coef * n_times_coef) * beta_sr * beta_re;
    const double rate_e = log2_1p(p * beta_se / (interference + sigma2));
    return std::max(0.0, rate_d - rate_e);
}

}  // namespace

double secrecy_siso(double p, double beta_sd, double beta_se, double sigma2) {
    const double rate_d = log2_1p(p * beta_sd / sigma2);
    const double rate_e = log2_1p(p * beta_se / sigma2);
    return std::max(0.0, rate_d - rate_e);
}

double secrecy_hd_df(double p, const ChannelGains& gains, Zone relay_zone,
                     HdEavesdropperModel model) {
    const PowerSplit split = hd_power_split(p, gains, relay_zone);
    const double rate_d = rate_hd_df(p, gains, relay_zone);
    const double snr_s = split.p1 * gains.se(relay_zone) / gains.sigma2;
    const double snr_r = split.p2 * gains.re(relay_zone) / gains.sigma2;
    const double snr_e =
        model == HdEavesdropperModel::informed_sum ? snr_s + snr_r : std::max(snr_s, snr_r);
    const double rate_e = 0.5 * log2_1p(snr_e);
    return std::max(0.0, rate_d - rate_e);
}

double secrecy_fd_df(double p, const ChannelGains& gains, Zone relay_zone) {
    if (p == 0.0) return 0.0;  // nothing transmitted, nothing leaked
    const RelayPower rp = optimal_p2_fd(p, gains, relay_zone);
    const double p1 = 2.0 * p - rp.p2;
    const double b_se = gains.se(relay_zone);
    const double rate_d =
        log2_1p(rp.p2 * gains.rd(relay_zone) / (p1 * gains.sd(relay_zone) + gains.sigma2));
    const double rate_e = log2_1p(p1 * b_se / gains.sigma2 +
                                  rp.p2 * gains.re(relay_zone) / (p1 * b_se + gains.sigma2));
    return std::max(0.0, rate_d - rate_e);
}

double secrecy_ris(double p, const SurfaceConfig& surface, const ChannelGains& gains) {
    return surface_secrecy(p, gains.beta_sd_ref, surface.n_ref * surface.alpha, gains.beta_sr,
                           gains.beta_rd_ref, gains.beta_se_ref, gains.beta_re_ref,
                           gains.sigma2);
}

double secrecy_star_zone(Zone zone, double p, double n_zone, const SurfaceConfig& surface,
                         const ChannelGains& gains) {
    return surface_secrecy(p, gains.sd(zone), n_zone * surface.zone_coef(zone), gains.beta_sr,
                           gains.rd(zone), gains.se(zone), gains.re(zone), gains.sigma2);
}

double secrecy_star(Zone zone, double p, const SurfaceConfig& surface,
                    const ChannelGains& gains) {
    const double n_zone = zone == Zone::reflection ? surface.n_r() : surface.n_t();
    return secrecy_star_zone(zone, p, n_zone, surface, gains);
}

}  // namespace starris
