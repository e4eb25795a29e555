#include "fuzzyhvac/baseline.hpp"

#include "fuzzyhvac/errors.hpp"

namespace fuzzyhvac {

void ThresholdConfig::validate() const {
    const bool ordered = heat_max_below <= heat_normal_range.first &&
                         heat_normal_range.first <= heat_normal_range.second &&
                         heat_normal_range.second <= off_range.first &&
                         off_range.first <= off_range.second &&
                         off_range.second <= cool_normal_range.first &&
                         cool_normal_range.first <= cool_normal_range.second &&
                         cool_normal_range.second <= cool_max_above;
    if (!ordered) {
        throw ConfigError("threshold bands must be ordered and non-overlapping");
    }
}

HvacState baseline_decide(double indoor_temp, const ThresholdConfig& cfg) {
    if (indoor_temp < cfg.heat_max_below) {
        return HvacState::HeatMax;
    }
    if (indoor_temp < cfg.off_range.first) {
        return HvacState::HeatNormal;
    }
    if (indoor_temp < cfg.cool_normal_range.first) {
        return HvacState::Off;
    }
    if (indoor_temp <= cfg.cool_max_above) {
        return HvacState::CoolNormal;
    }
    return HvacState::CoolMax;
}

} // namespace fuzzyhvac
