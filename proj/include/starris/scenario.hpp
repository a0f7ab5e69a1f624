#pragma once

#include <iosfwd>
#include <string>

#include "starris/channel.hpp"
#include "starris/rates.hpp"
#include "starris/secrecy.hpp"

namespace starris {

// One fully-described experiment point: geometry in meters, powers in dBm,
// gains in dBi, frequency in GHz, beta_li in dB, bandwidth in Hz. See
// README for the JSON schema; every field has a default so partial files
// are fine.
struct Scenario {
    Geometry geometry;
    RadioParams radio;
    NoiseParams noise;
    SurfaceConfig surface;
    double p_dbm = 20.0;
    double beta_li_db = -130.0;
    Zone relay_zone = Zone::reflection;

    double p_watt() const;
    ChannelGains resolve() const;
    void validate() const;

    RateReport rates(const ChannelGains& gains) const;
    SecrecyReport secrecy(const ChannelGains& gains) const;
};

// Parses a scenario from JSON text. Unknown keys are rejected: silently
// ignoring a typo in a config file is worse than failing.
Scenario scenario_from_json(const std::string& text);

Scenario load_scenario(const std::string& path);

std::string scenario_to_json(const Scenario& s);

}  // namespace starris
