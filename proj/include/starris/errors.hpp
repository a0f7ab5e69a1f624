#pragma once

#include <stdexcept>
#include <string>

namespace starris {

// Bad configuration: malformed scenario files, unknown presets, invalid
// sweep specs. CLI exit code 2.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Valid configuration that leaves the model's domain: path-loss distances
// below 10 m, infeasible target rates, disabled surface zones. CLI exit
// code 3.
class model_error : public std::runtime_error {
public:
    explicit model_error(const std::string& what) : std::runtime_error(what) {}
};

// The decode-and-forward power split requires beta_sr >= beta_sd and
// beta_sr + beta_rd > beta_sd; outside that regime the direct link
// dominates and callers should fall back to the SISO rate.
class relay_not_beneficial : public model_error {
public:
    explicit relay_not_beneficial(const std::string& what) : model_error(what) {}
};

}  // namespace starris
