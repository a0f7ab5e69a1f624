#pragma once

#include <string>
#include <vector>

#include "starris/sweep.hpp"

namespace starris {

// A canned figure sweep. Some figures plot the surface curves for several
// element counts at once; those counts live in n_ref_variants and
// run_preset labels the affected schemes "name@count".
struct Preset {
    std::string name;
    Scenario scenario;
    SweepSpec spec;
    std::vector<double> n_ref_variants;  // empty: use scenario.surface.n_ref only
};

std::vector<std::string> preset_names();

// Throws config_error for unknown names.
Preset preset(const std::string& name);

// Runs the sweep once per n_ref variant and merges the tables: schemes
// that depend on the element count appear once per variant, the rest once.
SweepTable run_preset(const Preset& p);

}  // namespace starris
