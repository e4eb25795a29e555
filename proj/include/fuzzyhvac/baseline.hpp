#pragma once

#include <utility>

#include "fuzzyhvac/hvac_state.hpp"

namespace fuzzyhvac {

/// Two-stage threshold thermostat bands. Defaults: heat at max power below
/// 15, normal power 15-17, both systems off 18-22, cooling at normal power
/// 23-25, max power above 25 (degC).
struct ThresholdConfig {
    double heat_max_below = 15.0;
    std::pair<double, double> heat_normal_range{15.0, 17.0};
    std::pair<double, double> off_range{18.0, 22.0};
    std::pair<double, double> cool_normal_range{23.0, 25.0};
    double cool_max_above = 25.0;

    /// Throws ConfigError unless the bands are ordered and non-overlapping.
    void validate() const;
};

/// Total piecewise mapping of an indoor temperature to a command. The gaps
/// the band list leaves open ((17,18) and (22,23) under the defaults) are
/// closed by extending the band below: HeatNormal runs up to the off
/// band's start, Off up to the cooling band's start.
HvacState baseline_decide(double indoor_temp, const ThresholdConfig& cfg = {});

} // namespace fuzzyhvac
