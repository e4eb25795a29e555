#pragma once

#include <string_view>

namespace fuzzyhvac {

/// The five discrete actuator commands, ordered from strongest heating to
/// strongest cooling.
enum class HvacState {
    HeatMax,
    HeatNormal,
    Off,
    CoolNormal,
    CoolMax,
};

std::string_view state_name(HvacState s); // "heat_max" .. "cool_max", Off -> "off"
HvacState state_from_name(std::string_view name); // throws ConfigError

constexpr bool is_heating(HvacState s) {
    return s == HvacState::HeatMax || s == HvacState::HeatNormal;
}
constexpr bool is_cooling(HvacState s) {
    return s == HvacState::CoolMax || s == HvacState::CoolNormal;
}

} // namespace fuzzyhvac
