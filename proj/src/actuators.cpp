#include "fuzzyhvac/actuators.hpp"

namespace fuzzyhvac {

ActuatorState route(HvacState state) {
    switch (state) {
    case HvacState::CoolMax: return {2, 0, false};
    case HvacState::CoolNormal: return {1, 0, false};
    case HvacState::Off: return {0, 0, true};
    case HvacState::HeatNormal: return {0, 1, false};
    case HvacState::HeatMax: return {0, 2, false};
    }
    return {0, 0, true};
}

bool LogSink::apply(std::string_view timestamp, HvacState state, const ActuatorState& leds) {
    (*out_) << timestamp << ' ' << state_name(state) << " yellow=" << leds.yellow_leds_on
            << " red=" << leds.red_leds_on << " blue=" << (leds.blue_led_on ? 1 : 0) << '\n';
    return out_->good();
}

bool RecordingSink::apply(std::string_view timestamp, HvacState state, const ActuatorState& leds) {
    records_.push_back({std::string(timestamp), state, leds});
    return true;
}

} // namespace fuzzyhvac
