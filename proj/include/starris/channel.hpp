#pragma once

#include <string>

namespace starris {

// STAR surfaces split space into a reflection zone (source side) and a
// transmission zone (far side). The DF relay and the SISO destination are
// associated with one zone, reflection unless configured otherwise.
enum class Zone { reflection, transmission };

inline const char* zone_name(Zone z) {
    return z == Zone::reflection ? "reflection" : "transmission";
}

struct PathLossParams {
    double carrier_frequency_ghz = 3.0;
    double tx_gain_dbi = 0.0;
    double rx_gain_dbi = 0.0;
    bool los = true;
};

struct NoiseParams {
    double bandwidth_hz = 10e6;
    double noise_figure_db = 10.0;
};

// Planar layout: source at the origin, surface/relay on the positive axis
// at d_sr, destinations and eavesdroppers at their axial coordinate with a
// perpendicular offset of d_v / d_v_e. Euclidean link distances follow by
// Pythagoras. All axial coordinates must be >= 10 m.
struct Geometry {
    double d_sr = 100.0;
    double d_sd_r = 100.0;
    double d_sd_t = 100.0;
    double d_se_r = 110.0;
    double d_se_t = 120.0;
    double d_v = 10.0;
    double d_v_e = 12.0;

    void validate() const;
};

// Per-link LoS/NLoS assignment. Defaults: hops through the surface/relay
// are LoS, the direct source->destination and source->eavesdropper links
// are NLoS. Both zones of a link type share one flag.
struct LosProfile {
    bool sr = true;
    bool rd = true;
    bool sd = false;
    bool se = false;
    bool re = true;
};

struct RadioParams {
    double carrier_frequency_ghz = 3.0;
    double gain_source_dbi = 5.0;
    double gain_surface_dbi = 5.0;  // surface and relay share the location and gain
    double gain_destination_dbi = 0.0;
    double gain_eavesdropper_dbi = 0.0;
    LosProfile los;

    void validate() const;
};

// Linear-scale channel gains plus noise power: the inputs of every rate
// and secrecy formula. beta_se is the source->eavesdropper gain of the
// relay's zone, pre-selected so the SISO/DF expressions can consume it
// without knowing the zone choice.
struct ChannelGains {
    double beta_sr = 0.0;
    double beta_rd_ref = 0.0;
    double beta_rd_tra = 0.0;
    double beta_sd_ref = 0.0;
    double beta_sd_tra = 0.0;
    double beta_se = 0.0;
    double beta_re_ref = 0.0;
    double beta_re_tra = 0.0;
    double beta_se_ref = 0.0;
    double beta_se_tra = 0.0;
    double beta_li = 0.0;
    double sigma2 = 0.0;

    double rd(Zone z) const { return z == Zone::reflection ? beta_rd_ref : beta_rd_tra; }
    double sd(Zone z) const { return z == Zone::reflection ? beta_sd_ref : beta_sd_tra; }
    double se(Zone z) const { return z == Zone::reflection ? beta_se_ref : beta_se_tra; }
    double re(Zone z) const { return z == Zone::reflection ? beta_re_ref : beta_re_tra; }

    void validate() const;
};

// 3GPP Urban Micro average channel gain in dB, LoS or NLoS branch. The
// model is valid for distances of at least 10 m; shorter links are
// rejected with a model_error.
double pathloss_db(double distance_m, const PathLossParams& params);

// Receiver noise power in dBm: -174 dBm/Hz thermal density plus bandwidth
// and noise figure.
double noise_power_dbm(const NoiseParams& params);

// Turns the planar geometry into the full set of linear link gains.
// beta_li comes straight from its configured dB value, never from
// geometry. Deterministic: identical inputs give bit-identical outputs.
ChannelGains resolve_gains(const Geometry& geometry, const RadioParams& radio,
                           const NoiseParams& noise, double beta_li_db,
                           Zone relay_zone = Zone::reflection);

}  // namespace starris
