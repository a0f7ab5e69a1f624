#pragma once

#include <cmath>

namespace starris {

inline double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }

inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

inline double dbm_to_watt(double x_dbm) { return std::pow(10.0, (x_dbm - 30.0) / 10.0); }

inline double watt_to_dbm(double p_w) { return 10.0 * std::log10(p_w) + 30.0; }

// log2(1 + x) evaluated through the natural-log path; every rate formula
// funnels through this one helper.
inline double log2_1p(double x) {
    constexpr double inv_ln2 = 1.4426950408889634;
    return std::log1p(x) * inv_ln2;
}

}  // namespace starris
