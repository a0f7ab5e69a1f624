#include "starris/sweep.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "starris/errors.hpp"
#include "starris/power.hpp"
#include "starris/secrecy.hpp"
#include "starris/units.hpp"
#include "sweep_internal.hpp"

namespace starris {

const char* to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::d_sd: return "d_sd";
        case SweepVariable::d_se: return "d_se";
        case SweepVariable::p_dbm: return "p_dbm";
        case SweepVariable::zeta: return "zeta";
        case SweepVariable::n_ref: return "n_ref";
        case SweepVariable::split_k: return "split_k";
    }
    return "?";
}

const char* to_string(Metric m) { return m == Metric::rate ? "rate" : "secrecy"; }

const char* to_string(Scheme s) {
    switch (s) {
        case Scheme::siso: return "siso";
        case Scheme::hd_df: return "hd_df";
        case Scheme::fd_df: return "fd_df";
        case Scheme::ris: return "ris";
        case Scheme::star_ref: return "star_ref";
        case Scheme::star_tra: return "star_tra";
    }
    return "?";
}

SweepVariable sweep_variable_from_string(const std::string& name) {
    for (auto v : {SweepVariable::d_sd, SweepVariable::d_se, SweepVariable::p_dbm,
                   SweepVariable::zeta, SweepVariable::n_ref, SweepVariable::split_k})
        if (name == to_string(v)) return v;
    throw config_error("unknown sweep variable: " + name);
}

Metric metric_from_string(const std::string& name) {
    for (auto m : {Metric::rate, Metric::secrecy})
        if (name == to_string(m)) return m;
    throw config_error("unknown metric: " + name);
}

Scheme scheme_from_string(const std::string& name) {
    for (auto s : all_schemes())
        if (name == to_string(s)) return s;
    throw config_error("unknown scheme: " + name);
}

std::vector<Scheme> all_schemes() {
    return {Scheme::siso, Scheme::hd_df, Scheme::fd_df,
            Scheme::ris,  Scheme::star_ref, Scheme::star_tra};
}

std::vector<double> linspace(double from, double to, int points) {
    if (points < 1) throw config_error("linspace: need at least one point");
    if (points == 1) {
        if (from != to) throw config_error("linspace: single-point grid needs from == to");
        return {from};
    }
    std::vector<double> g(points);
    const double step = (to - from) / (points - 1);
    for (int i = 0; i < points; ++i) g[i] = from + step * i;
    g.back() = to;
    return g;
}

void SweepSpec::validate() const {
    if (grid.empty()) throw config_error("sweep: empty grid");
    for (size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw config_error("sweep: grid must be strictly increasing");
    if (metrics.empty()) throw config_error("sweep: no metrics requested");
    if (schemes.empty()) throw config_error("sweep: no schemes requested");
    for (double v : grid) {
        if (!std::isfinite(v)) throw config_error("sweep: non-finite grid value");
        switch (variable) {
            case SweepVariable::d_sd:
            case SweepVariable::d_se:
                if (v < 10.0)
                    throw config_error("sweep: axial distances must be at least 10 m");
                break;
            case SweepVariable::zeta:
            case SweepVariable::split_k:
                if (v < 0.0 || v > 1.0)
                    throw config_error("sweep: swept value outside [0, 1]");
                break;
            case SweepVariable::n_ref:
                if (v < 0.0) throw config_error("sweep: n_ref must be nonnegative");
                break;
            case SweepVariable::p_dbm:
                break;
        }
    }
}

namespace detail {

void apply_variable(Scenario& sc, SweepVariable variable, double value) {
    switch (variable) {
        case SweepVariable::d_sd:
            sc.geometry.d_sd_r = value;
            sc.geometry.d_sd_t = value;
            break;
        case SweepVariable::d_se:
            sc.geometry.d_se_r = value;
            sc.geometry.d_se_t = value;
            break;
        case SweepVariable::p_dbm: sc.p_dbm = value; break;
        case SweepVariable::zeta: sc.surface.zeta = value; break;
        case SweepVariable::n_ref: sc.surface.n_ref = value; break;
        case SweepVariable::split_k: sc.surface.split_k = value; break;
    }
}

bool scheme_uses_elements(Scheme s) {
    return s == Scheme::ris || s == Scheme::star_ref || s == Scheme::star_tra;
}

Cell eval_cell(const Scenario& sc, const ChannelGains& g, Scheme scheme, Metric metric) {
    const double p = sc.p_watt();
    const Zone z = sc.relay_zone;
    Cell cell;
    switch (scheme) {
        case Scheme::siso:
            cell.value = metric == Metric::rate
                             ? rate_siso(p, g.sd(z), g.sigma2)
                             : secrecy_siso(p, g.sd(z), g.se(z), g.sigma2);
            break;
        case Scheme::hd_df:
            try {
                cell.value = metric == Metric::rate ? rate_hd_df(p, g, z) : secrecy_hd_df(p, g, z);
            } catch (const relay_not_beneficial&) {
                cell.value = metric == Metric::rate
                                 ? rate_siso(p, g.sd(z), g.sigma2)
                                 : secrecy_siso(p, g.sd(z), g.se(z), g.sigma2);
                cell.flag = "fallback_siso";
            }
            break;
        case Scheme::fd_df: {
            bool clamped = false;
            if (metric == Metric::rate) {
                cell.value = rate_fd_df_opt(p, g, z, &clamped);
            } else {
                clamped = optimal_p2_fd(p, g, z).clamped;
                cell.value = secrecy_fd_df(p, g, z);
            }
            if (clamped) cell.flag = "clamped_p2";
            break;
        }
        case Scheme::ris:
            cell.value =
                metric == Metric::rate ? rate_ris(p, sc.surface, g) : secrecy_ris(p, sc.surface, g);
            break;
        case Scheme::star_ref:
            cell.value = metric == Metric::rate
                             ? rate_star_ref(p, sc.surface, g)
                             : secrecy_star(Zone::reflection, p, sc.surface, g);
            break;
        case Scheme::star_tra:
            cell.value = metric == Metric::rate
                             ? rate_star_tra(p, sc.surface, g)
                             : secrecy_star(Zone::transmission, p, sc.surface, g);
            break;
    }
    return cell;
}

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

}  // namespace detail

SweepTable run_sweep(const Scenario& scenario, const SweepSpec& spec) {
    spec.validate();
    scenario.validate();
    SweepTable table;
    table.reserve(spec.grid.size() * spec.schemes.size() * spec.metrics.size());
    for (double x : spec.grid) {
        Scenario point = scenario;
        detail::apply_variable(point, spec.variable, x);
        const ChannelGains gains = point.resolve();
        for (Scheme scheme : spec.schemes) {
            for (Metric metric : spec.metrics) {
                const detail::Cell cell = detail::eval_cell(point, gains, scheme, metric);
                table.push_back({x, to_string(scheme), to_string(metric), cell.value, cell.flag});
            }
        }
    }
    return table;
}

namespace {

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string emit_csv(const SweepTable& table) {
    if (table.empty()) throw config_error("emit: empty table");
    std::string out = "variable,scheme,metric,value,flag\n";
    for (const SweepRow& row : table) {
        out += detail::format_double(row.variable);
        out += ',';
        out += csv_quote(row.scheme);
        out += ',';
        out += csv_quote(row.metric);
        out += ',';
        out += detail::format_double(row.value);
        out += ',';
        out += csv_quote(row.flag);
        out += '\n';
    }
    return out;
}

std::string emit_json(const SweepTable& table) {
    if (table.empty()) throw config_error("emit: empty table");
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const SweepRow& row : table) {
        rows.push_back({{"variable", row.variable},
                        {"scheme", row.scheme},
                        {"metric", row.metric},
                        {"value", row.value},
                        {"flag", row.flag}});
    }
    return rows.dump(2) + "\n";
}

}  // namespace starris
