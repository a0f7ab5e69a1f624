#include "starris/scenario.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "starris/errors.hpp"
#include "starris/units.hpp"

namespace starris {

namespace {

using json = nlohmann::ordered_json;

double num(const json& v, const std::string& where) {
    if (!v.is_number())
        throw config_error("scenario: " + where + " must be a number");
    return v.get<double>();
}

bool flag(const json& v, const std::string& where) {
    if (!v.is_boolean())
        throw config_error("scenario: " + where + " must be a boolean");
    return v.get<bool>();
}

Zone zone_from(const json& v, const std::string& where) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "reflection") return Zone::reflection;
        if (s == "transmission") return Zone::transmission;
    }
    throw config_error("scenario: " + where + " must be \"reflection\" or \"transmission\"");
}

void apply_geometry(const json& j, Geometry& g) {
    for (const auto& [k, v] : j.items()) {
        if (k == "d_sr") g.d_sr = num(v, "geometry.d_sr");
        else if (k == "d_sd_r") g.d_sd_r = num(v, "geometry.d_sd_r");
        else if (k == "d_sd_t") g.d_sd_t = num(v, "geometry.d_sd_t");
        else if (k == "d_se_r") g.d_se_r = num(v, "geometry.d_se_r");
        else if (k == "d_se_t") g.d_se_t = num(v, "geometry.d_se_t");
        else if (k == "d_v") g.d_v = num(v, "geometry.d_v");
        else if (k == "d_v_e") g.d_v_e = num(v, "geometry.d_v_e");
        else throw config_error("scenario: unknown key geometry." + k);
    }
}

void apply_los(const json& j, LosProfile& l) {
    for (const auto& [k, v] : j.items()) {
        if (k == "sr") l.sr = flag(v, "radio.los.sr");
        else if (k == "rd") l.rd = flag(v, "radio.los.rd");
        else if (k == "sd") l.sd = flag(v, "radio.los.sd");
        else if (k == "se") l.se = flag(v, "radio.los.se");
        else if (k == "re") l.re = flag(v, "radio.los.re");
        else throw config_error("scenario: unknown key radio.los." + k);
    }
}

void apply_radio(const json& j, RadioParams& r) {
    for (const auto& [k, v] : j.items()) {
        if (k == "carrier_frequency_ghz") r.carrier_frequency_ghz = num(v, "radio.carrier_frequency_ghz");
        else if (k == "gain_source_dbi") r.gain_source_dbi = num(v, "radio.gain_source_dbi");
        else if (k == "gain_surface_dbi") r.gain_surface_dbi = num(v, "radio.gain_surface_dbi");
        else if (k == "gain_destination_dbi") r.gain_destination_dbi = num(v, "radio.gain_destination_dbi");
        else if (k == "gain_eavesdropper_dbi") r.gain_eavesdropper_dbi = num(v, "radio.gain_eavesdropper_dbi");
        else if (k == "los") apply_los(v, r.los);
        else throw config_error("scenario: unknown key radio." + k);
    }
}

void apply_noise(const json& j, NoiseParams& n) {
    for (const auto& [k, v] : j.items()) {
        if (k == "bandwidth_hz") n.bandwidth_hz = num(v, "noise.bandwidth_hz");
        else if (k == "noise_figure_db") n.noise_figure_db = num(v, "noise.noise_figure_db");
        else throw config_error("scenario: unknown key noise." + k);
    }
}

void apply_surface(const json& j, SurfaceConfig& s) {
    for (const auto& [k, v] : j.items()) {
        if (k == "n_ref") s.n_ref = num(v, "surface.n_ref");
        else if (k == "split_k") s.split_k = num(v, "surface.split_k");
        else if (k == "zeta") s.zeta = num(v, "surface.zeta");
        else if (k == "alpha_r") s.alpha_r = num(v, "surface.alpha_r");
        else if (k == "alpha_t") s.alpha_t = num(v, "surface.alpha_t");
        else if (k == "alpha") s.alpha = num(v, "surface.alpha");
        else throw config_error("scenario: unknown key surface." + k);
    }
}

}  // namespace

double Scenario::p_watt() const { return dbm_to_watt(p_dbm); }

ChannelGains Scenario::resolve() const {
    return resolve_gains(geometry, radio, noise, beta_li_db, relay_zone);
}

void Scenario::validate() const {
    geometry.validate();
    radio.validate();
    surface.validate();
    if (!(noise.bandwidth_hz > 0.0)) throw model_error("noise: bandwidth must be positive");
    if (!std::isfinite(p_dbm)) throw model_error("p_dbm must be finite");
    if (!std::isfinite(beta_li_db) || beta_li_db > 0.0)
        throw model_error("beta_li_db must be finite and nonpositive");
}

RateReport Scenario::rates(const ChannelGains& gains) const {
    const double p = p_watt();
    RateReport r;
    r.r_siso = rate_siso(p, gains.sd(relay_zone), gains.sigma2);
    r.r_hd_df = rate_hd_df(p, gains, relay_zone);
    r.r_fd_df = rate_fd_df_opt(p, gains, relay_zone);
    r.r_ris = rate_ris(p, surface, gains);
    r.r_star_ref = rate_star_ref(p, surface, gains);
    r.r_star_tra = rate_star_tra(p, surface, gains);
    return r;
}

SecrecyReport Scenario::secrecy(const ChannelGains& gains) const {
    const double p = p_watt();
    SecrecyReport s;
    s.s_siso = secrecy_siso(p, gains.sd(relay_zone), gains.se(relay_zone), gains.sigma2);
    s.s_hd_df = secrecy_hd_df(p, gains, relay_zone);
    s.s_fd_df = secrecy_fd_df(p, gains, relay_zone);
    s.s_ris = secrecy_ris(p, surface, gains);
    s.s_star_ref = secrecy_star(Zone::reflection, p, surface, gains);
    s.s_star_tra = secrecy_star(Zone::transmission, p, surface, gains);
    return s;
}

Scenario scenario_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw config_error(std::string("scenario: JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw config_error("scenario: top level must be an object");

    Scenario s;
    for (const auto& [k, v] : j.items()) {
        if (k == "geometry") apply_geometry(v, s.geometry);
        else if (k == "radio") apply_radio(v, s.radio);
        else if (k == "noise") apply_noise(v, s.noise);
        else if (k == "surface") apply_surface(v, s.surface);
        else if (k == "p_dbm") s.p_dbm = num(v, "p_dbm");
        else if (k == "beta_li_db") s.beta_li_db = num(v, "beta_li_db");
        else if (k == "relay_zone") s.relay_zone = zone_from(v, "relay_zone");
        else throw config_error("scenario: unknown key " + k);
    }
    s.validate();
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("scenario: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw config_error("scenario: read failure on " + path);
    try {
        return scenario_from_json(buf.str());
    } catch (const config_error& e) {
        throw config_error(std::string(e.what()) + " (" + path + ")");
    }
}

std::string scenario_to_json(const Scenario& s) {
    json j;
    j["geometry"] = {{"d_sr", s.geometry.d_sr},     {"d_sd_r", s.geometry.d_sd_r},
                     {"d_sd_t", s.geometry.d_sd_t}, {"d_se_r", s.geometry.d_se_r},
                     {"d_se_t", s.geometry.d_se_t}, {"d_v", s.geometry.d_v},
                     {"d_v_e", s.geometry.d_v_e}};
    j["radio"] = {{"carrier_frequency_ghz", s.radio.carrier_frequency_ghz},
                  {"gain_source_dbi", s.radio.gain_source_dbi},
                  {"gain_surface_dbi", s.radio.gain_surface_dbi},
                  {"gain_destination_dbi", s.radio.gain_destination_dbi},
                  {"gain_eavesdropper_dbi", s.radio.gain_eavesdropper_dbi},
                  {"los",
                   {{"sr", s.radio.los.sr},
                    {"rd", s.radio.los.rd},
                    {"sd", s.radio.los.sd},
                    {"se", s.radio.los.se},
                    {"re", s.radio.los.re}}}};
    j["noise"] = {{"bandwidth_hz", s.noise.bandwidth_hz},
                  {"noise_figure_db", s.noise.noise_figure_db}};
    j["surface"] = {{"n_ref", s.surface.n_ref},     {"split_k", s.surface.split_k},
                    {"zeta", s.surface.zeta},       {"alpha_r", s.surface.alpha_r},
                    {"alpha_t", s.surface.alpha_t}, {"alpha", s.surface.alpha}};
    j["p_dbm"] = s.p_dbm;
    j["beta_li_db"] = s.beta_li_db;
    j["relay_zone"] = zone_name(s.relay_zone);
    return j.dump(2);
}

}  // namespace starris
