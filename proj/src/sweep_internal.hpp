#pragma once

#include "starris/sweep.hpp"

namespace starris::detail {

struct Cell {
    double value = 0.0;
    const char* flag = "";
};

// Evaluates one table cell; relay-not-beneficial points fall back to the
// SISO value with a flag instead of failing the whole sweep.
Cell eval_cell(const Scenario& scenario, const ChannelGains& gains, Scheme scheme, Metric metric);

void apply_variable(Scenario& scenario, SweepVariable variable, double value);

bool scheme_uses_elements(Scheme s);

std::string format_double(double v);

}  // namespace starris::detail
