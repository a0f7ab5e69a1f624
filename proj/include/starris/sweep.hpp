#pragma once

#include <string>
#include <vector>

#include "starris/scenario.hpp"

namespace starris {

// d_sd and d_se move both zones' axial coordinates together, matching how
// the sweeps are defined throughout.
enum class SweepVariable { d_sd, d_se, p_dbm, zeta, n_ref, split_k };

enum class Metric { rate, secrecy };

enum class Scheme { siso, hd_df, fd_df, ris, star_ref, star_tra };

const char* to_string(SweepVariable v);
const char* to_string(Metric m);
const char* to_string(Scheme s);
SweepVariable sweep_variable_from_string(const std::string& name);
Metric metric_from_string(const std::string& name);
Scheme scheme_from_string(const std::string& name);

std::vector<Scheme> all_schemes();

struct SweepSpec {
    SweepVariable variable = SweepVariable::d_sd;
    std::vector<double> grid;          // nonempty, strictly increasing
    std::vector<Metric> metrics{Metric::rate};
    std::vector<Scheme> schemes = all_schemes();

    void validate() const;
};

std::vector<double> linspace(double from, double to, int points);

struct SweepRow {
    double variable = 0.0;
    std::string scheme;
    std::string metric;
    double value = 0.0;
    std::string flag;  // "", "fallback_siso", or "clamped_p2"
};

using SweepTable = std::vector<SweepRow>;

// One row per (grid value, scheme, metric), in grid order. Points where
// the HD-DF split is undefined carry the SISO value plus the
// "fallback_siso" flag instead of erroring out.
SweepTable run_sweep(const Scenario& scenario, const SweepSpec& spec);

// CSV with header "variable,scheme,metric,value,flag", RFC-4180 quoting,
// floats at 9 significant digits, locale-independent "." decimals.
std::string emit_csv(const SweepTable& table);

// JSON array of row objects with the same field names as the CSV columns.
std::string emit_json(const SweepTable& table);

}  // namespace starris
