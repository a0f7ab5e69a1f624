#include "starris/thresholds.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "starris/errors.hpp"
#include "starris/power.hpp"
#include "starris/units.hpp"

namespace starris {

namespace {

struct SchemeTerms {
    double coef;          // per-element amplitude: alpha_r*zeta, alpha_t*sqrt(1-zeta^2), or alpha
    double beta_rd_zone;  // surface -> destination gain of the scheme's zone
    double beta_sd_zone;  // direct source -> destination gain of the scheme's zone
};

SchemeTerms scheme_terms(SurfaceScheme scheme, const SurfaceConfig& surface,
                         const ChannelGains& gains) {
    switch (scheme) {
        case SurfaceScheme::star_ref: {
            const double coef = surface.zone_coef(Zone::reflection);
            if (!(coef > 0.0))
                throw model_error("threshold: reflection zone disabled (alpha_r*zeta = 0)");
            return {coef, gains.beta_rd_ref, gains.beta_sd_ref};
        }
        case SurfaceScheme::star_tra: {
            const double coef = surface.zone_coef(Zone::transmission);
            if (!(coef > 0.0))
                throw model_error(
                    "threshold: transmission zone disabled (alpha_t*sqrt(1-zeta^2) = 0)");
            return {coef, gains.beta_rd_tra, gains.beta_sd_tra};
        }
        case SurfaceScheme::ris:
        default:
            return {surface.alpha, gains.beta_rd_ref, gains.beta_sd_ref};
    }
}

// Smallest integer with rate(n) strictly above the relay rate. Plain
// floor(bound)+1 except within 1e-9 of an integer, where the direct rate
// comparison decides which side of the boundary we are on.
ThresholdResult finish(double bound, double relay_rate,
                       const std::function<double(double)>& rate_at) {
    ThresholdResult res;
    if (!(bound > 0.0)) {
        res.bound_real = 0.0;
        res.n_min = 1;
        res.always_wins = true;
        return res;
    }
    res.bound_real = bound;
    const double nearest = std::nearbyint(bound);
    if (std::abs(bound - nearest) < 1e-9 && nearest >= 1.0) {
        const long cand = static_cast<long>(nearest);
        res.n_min = rate_at(static_cast<double>(cand)) > relay_rate ? cand : cand + 1;
    } else {
        res.n_min = static_cast<long>(std::floor(bound)) + 1;
    }
    if (res.n_min < 1) res.n_min = 1;
    return res;
}

}  // namespace

static ThresholdResult threshold_vs_hd(SurfaceScheme scheme, double p,
                                       const SurfaceConfig& surface, const ChannelGains& gains,
                                       Zone relay_zone) {
    const SchemeTerms t = scheme_terms(scheme, surface, gains);
    if (t.beta_sd_zone > gains.beta_sr) {
        // The direct link already beats anything the relay can decode; a
        // single element only helps.
        ThresholdResult res;
        res.always_wins = true;
        return res;
    }
    const double relay_rate = rate_hd_df(p, gains, relay_zone);

    const double b_sr = gains.beta_sr;
    const double b_rd = gains.rd(relay_zone);
    const double b_sd = gains.sd(relay_zone);
    const double s2 = gains.sigma2;
    const double x = 2.0 * p * b_sr * b_rd / ((b_sr + b_rd - b_sd) * s2);
    const double num =
        std::sqrt((std::sqrt(1.0 + x) - 1.0) * s2 / p) - std::sqrt(t.beta_sd_zone);
    const double bound = num / (t.coef * std::sqrt(b_sr * t.beta_rd_zone));

    const auto rate_at = [&](double n) {
        return log2_1p(
            surface_snr(p, t.beta_sd_zone, n * t.coef, b_sr, t.beta_rd_zone, s2));
    };
    return finish(bound, relay_rate, rate_at);
}

ThresholdResult min_elements_star_vs_hd(Zone zone, double p, const SurfaceConfig& surface,
                                        const ChannelGains& gains, Zone relay_zone) {
    const SurfaceScheme scheme =
        zone == Zone::reflection ? SurfaceScheme::star_ref : SurfaceScheme::star_tra;
    return threshold_vs_hd(scheme, p, surface, gains, relay_zone);
}

ThresholdResult min_elements_ris_vs_hd(double p, const SurfaceConfig& surface,
                                       const ChannelGains& gains, Zone relay_zone) {
    return threshold_vs_hd(SurfaceScheme::ris, p, surface, gains, relay_zone);
}

ThresholdResult min_elements_vs_fd(SurfaceScheme scheme, double p, const SurfaceConfig& surface,
                                   const ChannelGains& gains, Zone relay_zone) {
    const SchemeTerms t = scheme_terms(scheme, surface, gains);
    const RelayPower rp = optimal_p2_fd(p, gains, relay_zone);
    const double b_sr = gains.beta_sr;
    const double b_rd = gains.rd(relay_zone);
    const double b_sd = gains.sd(relay_zone);
    const double s2 = gains.sigma2;

    const double fd_snr = rp.p2 * b_rd / ((2.0 * p - rp.p2) * b_sd + s2);
    const double relay_rate = log2_1p(fd_snr);
    const double num = std::sqrt(fd_snr * s2 / p) - std::sqrt(t.beta_sd_zone);
    const double bound = num / (t.coef * std::sqrt(b_sr * t.beta_rd_zone));

    const auto rate_at = [&](double n) {
        return log2_1p(
            surface_snr(p, t.beta_sd_zone, n * t.coef, b_sr, t.beta_rd_zone, s2));
    };
    return finish(bound, relay_rate, rate_at);
}

}  // namespace starris
