#include "starris/presets.hpp"

#include <cmath>

#include "starris/errors.hpp"
#include "sweep_internal.hpp"

namespace starris {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475;

Scenario base_scenario(double d_sr, double d_sd, double d_se_r, double d_se_t, double p_dbm,
                       double zeta, double n_ref, double split_k = 0.5) {
    Scenario s;
    s.geometry.d_sr = d_sr;
    s.geometry.d_sd_r = d_sd;
    s.geometry.d_sd_t = d_sd;
    s.geometry.d_se_r = d_se_r;
    s.geometry.d_se_t = d_se_t;
    s.geometry.d_v = 10.0;
    s.geometry.d_v_e = 12.0;
    s.p_dbm = p_dbm;
    s.surface.zeta = zeta;
    s.surface.n_ref = n_ref;
    s.surface.split_k = split_k;
    return s;
}

SweepSpec sweep_of(SweepVariable v, double from, double to, std::vector<Metric> metrics) {
    SweepSpec spec;
    spec.variable = v;
    spec.grid = linspace(from, to, 201);
    spec.metrics = std::move(metrics);
    return spec;
}

std::string variant_label(double n) {
    if (n == std::floor(n) && std::abs(n) < 1e15) {
        return std::to_string(static_cast<long long>(n));
    }
    return detail::format_double(n);
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"fig3a", "fig3b", "fig4",  "fig5",  "fig6a", "fig6b", "fig7",  "fig8a",
            "fig8b", "fig9a", "fig9b", "fig10", "fig11", "fig12a", "fig12b", "fig13"};
}

Preset preset(const std::string& name) {
    Preset p;
    p.name = name;
    if (name == "fig3a") {
        p.scenario = base_scenario(100, 100, 110, 120, 20, kInvSqrt2, 50);
        p.spec = sweep_of(SweepVariable::d_sd, 40, 140, {Metric::rate});
        p.n_ref_variants = {50, 150};
    } else if (name == "fig3b") {
        p.scenario = base_scenario(100, 100, 110, 120, 20, 0.8, 500);
        p.spec = sweep_of(SweepVariable::d_sd, 40, 140, {Metric::rate});
        p.n_ref_variants = {500, 1500};
    } else if (name == "fig4") {
        p.scenario = base_scenario(60, 80, 110, 120, 20, 0.5, 1000);
        p.spec = sweep_of(SweepVariable::p_dbm, -10, 40, {Metric::rate});
    } else if (name == "fig5") {
        p.scenario = base_scenario(60, 80, 110, 120, 20, 0.5, 500);
        p.spec = sweep_of(SweepVariable::zeta, 0, 1, {Metric::rate});
        p.n_ref_variants = {500, 1500};
    } else if (name == "fig6a") {
        p.scenario = base_scenario(60, 80, 110, 120, 10, 0.5, 1000);
        p.spec = sweep_of(SweepVariable::n_ref, 0, 2000, {Metric::rate});
    } else if (name == "fig6b") {
        p.scenario = base_scenario(60, 80, 110, 120, 20, 0.5, 1000);
        p.spec = sweep_of(SweepVariable::n_ref, 0, 2000, {Metric::rate});
    } else if (name == "fig7") {
        p.scenario = base_scenario(60, 80, 110, 120, 20, 0.5, 500);
        p.spec = sweep_of(SweepVariable::split_k, 0, 1, {Metric::rate});
        p.n_ref_variants = {500, 1500};
    } else if (name == "fig8a") {
        p.scenario = base_scenario(80, 100, 110, 120, 20, kInvSqrt2, 100);
        p.spec = sweep_of(SweepVariable::p_dbm, -10, 40, {Metric::secrecy});
    } else if (name == "fig8b") {
        p.scenario = base_scenario(80, 100, 110, 120, 20, 0.5, 1000);
        p.spec = sweep_of(SweepVariable::p_dbm, -10, 40, {Metric::secrecy});
    } else if (name == "fig9a") {
        p.scenario = base_scenario(80, 100, 110, 120, 0, 0.5, 100);
        p.spec = sweep_of(SweepVariable::d_sd, 40, 140, {Metric::secrecy});
        p.n_ref_variants = {100, 300};
    } else if (name == "fig9b") {
        p.scenario = base_scenario(80, 100, 110, 120, -10, 0.5, 300);
        p.spec = sweep_of(SweepVariable::d_sd, 40, 140, {Metric::secrecy});
        p.n_ref_variants = {300, 600};
    } else if (name == "fig10") {
        p.scenario = base_scenario(80, 85, 110, 110, 10, 0.5, 100);
        p.spec = sweep_of(SweepVariable::d_se, 40, 140, {Metric::secrecy});
        p.n_ref_variants = {100, 300};
    } else if (name == "fig11") {
        p.scenario = base_scenario(80, 100, 110, 120, 10, 0.5, 500);
        p.spec = sweep_of(SweepVariable::zeta, 0, 1, {Metric::secrecy});
        p.n_ref_variants = {500, 1500};
    } else if (name == "fig12a") {
        p.scenario = base_scenario(90, 100, 110, 120, -10, 0.5, 1000);
        p.spec = sweep_of(SweepVariable::n_ref, 0, 2000, {Metric::secrecy});
    } else if (name == "fig12b") {
        p.scenario = base_scenario(90, 100, 110, 120, 5, 0.5, 1000);
        p.spec = sweep_of(SweepVariable::n_ref, 0, 2000, {Metric::secrecy});
    } else if (name == "fig13") {
        p.scenario = base_scenario(90, 100, 110, 120, 10, 0.5, 300);
        p.spec = sweep_of(SweepVariable::split_k, 0, 1, {Metric::secrecy});
        p.n_ref_variants = {300, 1000};
    } else {
        throw config_error("unknown preset: " + name);
    }
    return p;
}

SweepTable run_preset(const Preset& p) {
    if (p.n_ref_variants.empty()) return run_sweep(p.scenario, p.spec);

    std::vector<SweepTable> tables;
    tables.reserve(p.n_ref_variants.size());
    for (double n : p.n_ref_variants) {
        Scenario sc = p.scenario;
        sc.surface.n_ref = n;
        tables.push_back(run_sweep(sc, p.spec));
    }

    const size_t n_metrics = p.spec.metrics.size();
    const size_t per_point = p.spec.schemes.size() * n_metrics;
    SweepTable out;
    for (size_t i = 0; i < p.spec.grid.size(); ++i) {
        for (size_t si = 0; si < p.spec.schemes.size(); ++si) {
            const bool per_variant = detail::scheme_uses_elements(p.spec.schemes[si]);
            const size_t n_variants = per_variant ? p.n_ref_variants.size() : 1;
            for (size_t vi = 0; vi < n_variants; ++vi) {
                for (size_t mi = 0; mi < n_metrics; ++mi) {
                    SweepRow row = tables[vi][i * per_point + si * n_metrics + mi];
                    if (per_variant)
                        row.scheme += "@" + variant_label(p.n_ref_variants[vi]);
                    out.push_back(std::move(row));
                }
            }
        }
    }
    return out;
}

}  // namespace starris
