#include "starris/rates.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "starris/errors.hpp"
#include "starris/power.hpp"
#include "starris/units.hpp"

namespace starris {

double SurfaceConfig::zone_coef(Zone z) const {
    if (z == Zone::reflection) return alpha_r * zeta;
    return alpha_t * std::sqrt(1.0 - zeta * zeta);
}

void SurfaceConfig::validate() const {
    if (!(n_ref >= 0.0)) throw model_error("surface: n_ref must be nonnegative");
    if (!(split_k >= 0.0 && split_k <= 1.0))
        throw model_error("surface: split_k must lie in [0, 1]");
    if (!(zeta >= 0.0 && zeta <= 1.0)) throw model_error("surface: zeta must lie in [0, 1]");
    for (double a : {alpha_r, alpha_t, alpha})
        if (!(a > 0.0 && a <= 1.0))
            throw model_error("surface: amplitude coefficients must lie in (0, 1]");
}

double surface_snr(double p, double beta_direct, double n_times_coef, double beta_sr,
                   double beta_rd, double sigma2) {
    const double amp = std::sqrt(beta_direct) + n_times_coef * std::sqrt(beta_sr * beta_rd);
    return p * amp * amp / sigma2;
}

double rate_siso(double p, double beta_sd, double sigma2) {
    return log2_1p(p * beta_sd / sigma2);
}

double rate_hd_df(double p, const ChannelGains& gains, Zone relay_zone) {
    const double b_sr = gains.beta_sr;
    const double b_rd = gains.rd(relay_zone);
    const double b_sd = gains.sd(relay_zone);
    const double den = b_sr + b_rd - b_sd;
    if (!(b_sr >= b_sd) || !(den > 0.0)) {
        std::ostringstream os;
        os << "HD-DF relaying not beneficial: beta_sr = " << b_sr << ", beta_sd = " << b_sd
           << ", beta_sr + beta_rd - beta_sd = " << den;
        throw relay_not_beneficial(os.str());
    }
    return 0.5 * log2_1p(2.0 * p * b_sr * b_rd / (den * gains.sigma2));
}

double rate_fd_df(const PowerSplit& split, const ChannelGains& gains, Zone relay_zone) {
    const double hop1 = split.p1 * gains.beta_sr / (split.p2 * gains.beta_li + gains.sigma2);
    const double hop2 =
        split.p2 * gains.rd(relay_zone) / (split.p1 * gains.sd(relay_zone) + gains.sigma2);
    return log2_1p(std::min(hop1, hop2));
}

double rate_fd_df_opt(double p, const ChannelGains& gains, Zone relay_zone, bool* clamped) {
    const RelayPower rp = optimal_p2_fd(p, gains, relay_zone);
    if (clamped) *clamped = rp.clamped;
    const double p1 = 2.0 * p - rp.p2;
    return log2_1p(rp.p2 * gains.rd(relay_zone) / (p1 * gains.sd(relay_zone) + gains.sigma2));
}

double rate_ris(double p, const SurfaceConfig& surface, const ChannelGains& gains) {
    return log2_1p(surface_snr(p, gains.beta_sd_ref, surface.n_ref * surface.alpha,
                               gains.beta_sr, gains.beta_rd_ref, gains.sigma2));
}

double rate_star_zone(Zone z, double p, double n_zone, const SurfaceConfig& surface,
                      const ChannelGains& gains) {
    return log2_1p(surface_snr(p, gains.sd(z), n_zone * surface.zone_coef(z), gains.beta_sr,
                               gains.rd(z), gains.sigma2));
}

double rate_star_ref(double p, const SurfaceConfig& surface, const ChannelGains& gains) {
    return rate_star_zone(Zone::reflection, p, surface.n_r(), surface, gains);
}

double rate_star_tra(double p, const SurfaceConfig& surface, const ChannelGains& gains) {
    return rate_star_zone(Zone::transmission, p, surface.n_t(), surface, gains);
}

}  // namespace starris
