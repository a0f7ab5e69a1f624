// Command-line front end: scenario files plus flag overrides in, CSV/JSON
// tables or small point reports out. Exit codes: 0 success, 2 bad
// configuration, 3 model-domain error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "starris/errors.hpp"
#include "starris/power.hpp"
#include "starris/presets.hpp"
#include "starris/secrecy.hpp"
#include "starris/sweep.hpp"
#include "starris/thresholds.hpp"
#include "starris/units.hpp"

namespace {

using namespace starris;

struct ScenarioOpts {
    std::string file;
    std::optional<double> p_dbm, zeta, split_k, n_ref, alpha, alpha_r, alpha_t;
    std::optional<double> d_sr, d_sd, d_se, d_v, d_v_e, beta_li_db;
    std::string relay_zone;
};

void add_scenario_options(CLI::App* cmd, ScenarioOpts& o) {
    cmd->add_option("--scenario", o.file, "Scenario JSON file (defaults used when omitted)");
    cmd->add_option("--p-dbm", o.p_dbm, "Override transmit power [dBm]");
    cmd->add_option("--zeta", o.zeta, "Override reflection-to-transmission power ratio");
    cmd->add_option("--split-k", o.split_k, "Override element-splitting factor K");
    cmd->add_option("--n-ref", o.n_ref, "Override total element count");
    cmd->add_option("--alpha", o.alpha, "Override reflect-only surface amplitude");
    cmd->add_option("--alpha-r", o.alpha_r, "Override reflection amplitude");
    cmd->add_option("--alpha-t", o.alpha_t, "Override transmission amplitude");
    cmd->add_option("--d-sr", o.d_sr, "Override source->surface distance [m]");
    cmd->add_option("--d-sd", o.d_sd, "Override both axial destination distances [m]");
    cmd->add_option("--d-se", o.d_se, "Override both axial eavesdropper distances [m]");
    cmd->add_option("--d-v", o.d_v, "Override destination perpendicular offset [m]");
    cmd->add_option("--d-v-e", o.d_v_e, "Override eavesdropper perpendicular offset [m]");
    cmd->add_option("--beta-li-db", o.beta_li_db, "Override residual loop interference [dB]");
    cmd->add_option("--relay-zone", o.relay_zone, "Zone the relay serves: reflection|transmission")
        ->check(CLI::IsMember({"reflection", "transmission"}));
}

Scenario make_scenario(const ScenarioOpts& o) {
    Scenario s = o.file.empty() ? Scenario{} : load_scenario(o.file);
    if (o.p_dbm) s.p_dbm = *o.p_dbm;
    if (o.zeta) s.surface.zeta = *o.zeta;
    if (o.split_k) s.surface.split_k = *o.split_k;
    if (o.n_ref) s.surface.n_ref = *o.n_ref;
    if (o.alpha) s.surface.alpha = *o.alpha;
    if (o.alpha_r) s.surface.alpha_r = *o.alpha_r;
    if (o.alpha_t) s.surface.alpha_t = *o.alpha_t;
    if (o.d_sr) s.geometry.d_sr = *o.d_sr;
    if (o.d_sd) s.geometry.d_sd_r = s.geometry.d_sd_t = *o.d_sd;
    if (o.d_se) s.geometry.d_se_r = s.geometry.d_se_t = *o.d_se;
    if (o.d_v) s.geometry.d_v = *o.d_v;
    if (o.d_v_e) s.geometry.d_v_e = *o.d_v_e;
    if (o.beta_li_db) s.beta_li_db = *o.beta_li_db;
    if (!o.relay_zone.empty())
        s.relay_zone = o.relay_zone == "reflection" ? Zone::reflection : Zone::transmission;
    s.validate();
    return s;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!std::cout) throw config_error("failed to write to standard output");
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw config_error("cannot open output file " + out_path);
    out << text;
    out.flush();
    if (!out) throw config_error("write failure on output file " + out_path);
}

nlohmann::ordered_json threshold_json(const ThresholdResult& r) {
    return {{"bound_real", r.bound_real}, {"n_min", r.n_min}, {"always_wins", r.always_wins}};
}

int run_sweep_cmd(const ScenarioOpts& opts, const std::string& variable, double from, double to,
                  int points, const std::vector<std::string>& metric_names,
                  const std::vector<std::string>& scheme_names, const std::string& format,
                  const std::string& out_path) {
    Scenario sc = make_scenario(opts);
    SweepSpec spec;
    spec.variable = sweep_variable_from_string(variable);
    spec.grid = linspace(from, to, points);
    spec.metrics.clear();
    for (const auto& m : metric_names) spec.metrics.push_back(metric_from_string(m));
    spec.schemes.clear();
    for (const auto& s : scheme_names) spec.schemes.push_back(scheme_from_string(s));
    const SweepTable table = run_sweep(sc, spec);
    write_output(format == "json" ? emit_json(table) : emit_csv(table), out_path);
    return 0;
}

int run_preset_cmd(const std::string& name, bool list, const std::string& format,
                   const std::string& out_path) {
    if (list) {
        for (const auto& n : preset_names()) std::cout << n << "\n";
        return 0;
    }
    if (name.empty()) throw config_error("preset: give a name or --list");
    const Preset p = preset(name);
    const SweepTable table = run_preset(p);
    write_output(format == "json" ? emit_json(table) : emit_csv(table), out_path);
    return 0;
}

int run_threshold_cmd(const ScenarioOpts& opts, const std::string& vs, const std::string& format,
                      const std::string& out_path) {
    Scenario sc = make_scenario(opts);
    const ChannelGains g = sc.resolve();
    const double p = sc.p_watt();

    nlohmann::ordered_json j;
    std::string text;
    // STAR bounds count one zone's elements; zone_fraction > 0 adds the
    // whole-surface equivalent (zone count divided by K or 1-K).
    const auto add = [&](const char* comparison, const char* scheme, const ThresholdResult& r,
                         double zone_fraction) {
        j[comparison][scheme] = threshold_json(r);
        text += std::string("vs ") + comparison + "  " + scheme + ": ";
        if (r.always_wins) {
            text += "always wins (any N >= 1)\n";
            return;
        }
        text += "bound = " + std::to_string(r.bound_real) + ", n_min = " + std::to_string(r.n_min);
        if (zone_fraction > 0.0) {
            const double total_bound = r.bound_real / zone_fraction;
            const long total_n = static_cast<long>(std::floor(total_bound)) + 1;
            j[comparison][scheme]["bound_total"] = total_bound;
            j[comparison][scheme]["n_min_total"] = total_n;
            text += " (whole surface: bound = " + std::to_string(total_bound) +
                    ", n_min = " + std::to_string(total_n) + ")";
        }
        text += "\n";
    };
    const double k_ref = sc.surface.split_k;
    const double k_tra = 1.0 - sc.surface.split_k;
    if (vs == "hd" || vs == "both") {
        add("hd", "star_ref", min_elements_star_vs_hd(Zone::reflection, p, sc.surface, g, sc.relay_zone), k_ref);
        add("hd", "star_tra", min_elements_star_vs_hd(Zone::transmission, p, sc.surface, g, sc.relay_zone), k_tra);
        add("hd", "ris", min_elements_ris_vs_hd(p, sc.surface, g, sc.relay_zone), 0.0);
    }
    if (vs == "fd" || vs == "both") {
        add("fd", "star_ref", min_elements_vs_fd(SurfaceScheme::star_ref, p, sc.surface, g, sc.relay_zone), k_ref);
        add("fd", "star_tra", min_elements_vs_fd(SurfaceScheme::star_tra, p, sc.surface, g, sc.relay_zone), k_tra);
        add("fd", "ris", min_elements_vs_fd(SurfaceScheme::ris, p, sc.surface, g, sc.relay_zone), 0.0);
    }
    write_output(format == "json" ? j.dump(2) + "\n" : text, out_path);
    return 0;
}

int run_power_cmd(const ScenarioOpts& opts, std::optional<double> target_rate,
                  const std::string& format, const std::string& out_path) {
    Scenario sc = make_scenario(opts);
    const ChannelGains g = sc.resolve();
    const double p = sc.p_watt();

    const RelayPower fd = optimal_p2_fd(p, g, sc.relay_zone);
    nlohmann::ordered_json j;
    j["p_avg_w"] = p;
    j["fd_optimal"] = {{"p1_w", 2.0 * p - fd.p2}, {"p2_w", fd.p2}, {"clamped", fd.clamped}};
    std::string text = "average power: " + std::to_string(p) + " W\n";
    text += "FD-DF optimal split: p1 = " + std::to_string(2.0 * p - fd.p2) +
            " W, p2 = " + std::to_string(fd.p2) + " W" + (fd.clamped ? " (clamped)" : "") + "\n";
    try {
        const PowerSplit hd = hd_power_split(p, g, sc.relay_zone);
        j["hd_optimal"] = {{"p1_w", hd.p1}, {"p2_w", hd.p2}};
        text += "HD-DF optimal split: p1 = " + std::to_string(hd.p1) +
                " W, p2 = " + std::to_string(hd.p2) + " W\n";
    } catch (const relay_not_beneficial& e) {
        j["hd_optimal"] = e.what();
        text += std::string("HD-DF optimal split: ") + e.what() + "\n";
    }
    if (target_rate) {
        const double preq = required_power_fd(*target_rate, g, sc.relay_zone);
        j["fd_required_power"] = {{"target_rate", *target_rate},
                                  {"p_w", preq},
                                  {"p_dbm", watt_to_dbm(preq)}};
        text += "FD-DF power for " + std::to_string(*target_rate) +
                " bit/s/Hz: " + std::to_string(preq) + " W (" +
                std::to_string(watt_to_dbm(preq)) + " dBm)\n";
    }
    write_output(format == "json" ? j.dump(2) + "\n" : text, out_path);
    return 0;
}

int run_secrecy_cmd(const ScenarioOpts& opts, const std::string& format,
                    const std::string& out_path) {
    Scenario sc = make_scenario(opts);
    const ChannelGains g = sc.resolve();
    const RateReport r = sc.rates(g);
    const SecrecyReport s = sc.secrecy(g);

    nlohmann::ordered_json j;
    j["rate"] = {{"siso", r.r_siso},         {"hd_df", r.r_hd_df},
                 {"fd_df", r.r_fd_df},       {"ris", r.r_ris},
                 {"star_ref", r.r_star_ref}, {"star_tra", r.r_star_tra}};
    j["secrecy"] = {{"siso", s.s_siso},         {"hd_df", s.s_hd_df},
                    {"fd_df", s.s_fd_df},       {"ris", s.s_ris},
                    {"star_ref", s.s_star_ref}, {"star_tra", s.s_star_tra}};
    std::string text = "scheme      rate [bit/s/Hz]  secrecy [bit/s/Hz]\n";
    const auto line = [&](const char* name, double rv, double sv) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%-10s  %15.6f  %18.6f\n", name, rv, sv);
        text += buf;
    };
    line("siso", r.r_siso, s.s_siso);
    line("hd_df", r.r_hd_df, s.s_hd_df);
    line("fd_df", r.r_fd_df, s.s_fd_df);
    line("ris", r.r_ris, s.s_ris);
    line("star_ref", r.r_star_ref, s.s_star_ref);
    line("star_tra", r.r_star_tra, s.s_star_tra);
    write_output(format == "json" ? j.dump(2) + "\n" : text, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Achievable-rate and secrecy-rate calculator for STAR-RIS, RIS, SISO and DF relaying links"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string out_path;

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one variable over a grid");
    ScenarioOpts sweep_opts;
    add_scenario_options(sweep_cmd, sweep_opts);
    std::string variable = "d_sd";
    double from = 40.0, to = 140.0;
    int points = 201;
    std::vector<std::string> metric_names{"rate"};
    std::vector<std::string> scheme_names;
    for (auto s : all_schemes()) scheme_names.push_back(to_string(s));
    sweep_cmd->add_option("--variable", variable, "d_sd|d_se|p_dbm|zeta|n_ref|split_k");
    sweep_cmd->add_option("--from", from, "Grid start");
    sweep_cmd->add_option("--to", to, "Grid end");
    sweep_cmd->add_option("--points", points, "Grid size (default 201)");
    sweep_cmd->add_option("--metrics", metric_names, "rate and/or secrecy")->delimiter(',');
    sweep_cmd->add_option("--schemes", scheme_names, "Subset of schemes")->delimiter(',');

    // preset
    auto* preset_cmd = app.add_subcommand("preset", "Run a canned figure sweep");
    std::string preset_name;
    bool list_presets = false;
    preset_cmd->add_option("name", preset_name, "Preset name, e.g. fig3a");
    preset_cmd->add_flag("--list", list_presets, "List preset names");

    // threshold
    auto* thr_cmd = app.add_subcommand("threshold", "Minimum element counts vs DF relaying");
    ScenarioOpts thr_opts;
    add_scenario_options(thr_cmd, thr_opts);
    std::string vs = "both";
    thr_cmd->add_option("--vs", vs, "hd, fd or both")->check(CLI::IsMember({"hd", "fd", "both"}));

    // power
    auto* pow_cmd = app.add_subcommand("power", "Optimal DF power splits; required power for a target rate");
    ScenarioOpts pow_opts;
    add_scenario_options(pow_cmd, pow_opts);
    std::optional<double> target_rate;
    pow_cmd->add_option("--target-rate", target_rate, "Target rate [bit/s/Hz]");

    // secrecy
    auto* sec_cmd = app.add_subcommand("secrecy", "Point report: rates and secrecy rates");
    ScenarioOpts sec_opts;
    add_scenario_options(sec_cmd, sec_opts);

    for (auto* cmd : {sweep_cmd, preset_cmd, thr_cmd, pow_cmd, sec_cmd}) {
        cmd->add_option("--format", format, "csv|json (tables) / text|json (reports)");
        cmd->add_option("--out", out_path, "Write to file instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sweep_cmd->parsed())
            return run_sweep_cmd(sweep_opts, variable, from, to, points, metric_names,
                                 scheme_names, format, out_path);
        if (preset_cmd->parsed()) return run_preset_cmd(preset_name, list_presets, format, out_path);
        if (thr_cmd->parsed()) return run_threshold_cmd(thr_opts, vs, format, out_path);
        if (pow_cmd->parsed()) return run_power_cmd(pow_opts, target_rate, format, out_path);
        if (sec_cmd->parsed()) return run_secrecy_cmd(sec_opts, format, out_path);
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const model_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
