#include "starris/channel.hpp"

#include <cmath>
#include <sstream>

#include "starris/errors.hpp"
#include "starris/units.hpp"

namespace starris {

namespace {

constexpr double kMinDistanceM = 10.0;

void require_axial(double v, const char* name) {
    if (!(v >= kMinDistanceM)) {
        std::ostringstream os;
        os << "geometry: " << name << " = " << v << " m is below the 10 m model floor";
        throw model_error(os.str());
    }
}

double link_gain(double distance_m, const PathLossParams& params, const char* link) {
    if (!(distance_m >= kMinDistanceM)) {
        std::ostringstream os;
        os << "link " << link << ": distance " << distance_m
           << " m is below the 10 m model floor";
        throw model_error(os.str());
    }
    return db_to_linear(pathloss_db(distance_m, params));
}

}  // namespace

void Geometry::validate() const {
    require_axial(d_sr, "d_sr");
    require_axial(d_sd_r, "d_sd_r");
    require_axial(d_sd_t, "d_sd_t");
    require_axial(d_se_r, "d_se_r");
    require_axial(d_se_t, "d_se_t");
    if (!(d_v >= 0.0) || !(d_v_e >= 0.0))
        throw model_error("geometry: perpendicular offsets must be nonnegative");
}

void RadioParams::validate() const {
    if (!(carrier_frequency_ghz > 0.0))
        throw model_error("radio: carrier frequency must be positive");
}

void ChannelGains::validate() const {
    const double betas[] = {beta_sr,     beta_rd_ref, beta_rd_tra, beta_sd_ref,
                            beta_sd_tra, beta_se,     beta_re_ref, beta_re_tra,
                            beta_se_ref, beta_se_tra, beta_li};
    for (double b : betas)
        if (!(b >= 0.0)) throw model_error("channel gains must be nonnegative");
    if (!(sigma2 > 0.0)) throw model_error("noise power must be positive");
    if (!(beta_li <= 1.0))
        throw model_error("beta_li > 1: residual interference must be an attenuation");
}

double pathloss_db(double distance_m, const PathLossParams& params) {
    if (!(params.carrier_frequency_ghz > 0.0))
        throw model_error("pathloss: carrier frequency must be positive");
    if (!(distance_m >= kMinDistanceM)) {
        std::ostringstream os;
        os << "pathloss: d = " << distance_m << " m is below the 10 m model floor";
        throw model_error(os.str());
    }
    const double g = params.tx_gain_dbi + params.rx_gain_dbi;
    const double lf = std::log10(params.carrier_frequency_ghz);
    const double ld = std::log10(distance_m);
    if (params.los) return g - 28.0 - 20.0 * lf - 22.0 * ld;
    return g - 22.7 - 26.0 * lf - 36.7 * ld;
}

double noise_power_dbm(const NoiseParams& params) {
    if (!(params.bandwidth_hz > 0.0))
        throw model_error("noise: bandwidth must be positive");
    return -174.0 + 10.0 * std::log10(params.bandwidth_hz) + params.noise_figure_db;
}

ChannelGains resolve_gains(const Geometry& geometry, const RadioParams& radio,
                           const NoiseParams& noise, double beta_li_db, Zone relay_zone) {
    geometry.validate();
    radio.validate();

    const double fc = radio.carrier_frequency_ghz;
    const auto link = [&](double tx_dbi, double rx_dbi, bool los) {
        return PathLossParams{fc, tx_dbi, rx_dbi, los};
    };
    const PathLossParams sr = link(radio.gain_source_dbi, radio.gain_surface_dbi, radio.los.sr);
    const PathLossParams rd = link(radio.gain_surface_dbi, radio.gain_destination_dbi, radio.los.rd);
    const PathLossParams sd = link(radio.gain_source_dbi, radio.gain_destination_dbi, radio.los.sd);
    const PathLossParams se = link(radio.gain_source_dbi, radio.gain_eavesdropper_dbi, radio.los.se);
    const PathLossParams re = link(radio.gain_surface_dbi, radio.gain_eavesdropper_dbi, radio.los.re);

    const Geometry& g = geometry;
    ChannelGains out;
    out.beta_sr = link_gain(g.d_sr, sr, "source->surface");
    out.beta_rd_ref =
        link_gain(std::hypot(g.d_sd_r - g.d_sr, g.d_v), rd, "surface->destination(reflection)");
    out.beta_rd_tra =
        link_gain(std::hypot(g.d_sd_t - g.d_sr, g.d_v), rd, "surface->destination(transmission)");
    out.beta_sd_ref =
        link_gain(std::hypot(g.d_sd_r, g.d_v), sd, "source->destination(reflection)");
    out.beta_sd_tra =
        link_gain(std::hypot(g.d_sd_t, g.d_v), sd, "source->destination(transmission)");
    out.beta_se_ref =
        link_gain(std::hypot(g.d_se_r, g.d_v_e), se, "source->eavesdropper(reflection)");
    out.beta_se_tra =
        link_gain(std::hypot(g.d_se_t, g.d_v_e), se, "source->eavesdropper(transmission)");
    out.beta_re_ref =
        link_gain(std::hypot(g.d_se_r - g.d_sr, g.d_v_e), re, "surface->eavesdropper(reflection)");
    out.beta_re_tra =
        link_gain(std::hypot(g.d_se_t - g.d_sr, g.d_v_e), re, "surface->eavesdropper(transmission)");
    out.beta_se = out.se(relay_zone);
    out.beta_li = db_to_linear(beta_li_db);
    out.sigma2 = dbm_to_watt(noise_power_dbm(noise));
    out.validate();
    return out;
}

}  // namespace starris
