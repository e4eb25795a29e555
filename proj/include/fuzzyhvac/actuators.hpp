#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyhvac/hvac_state.hpp"

namespace fuzzyhvac {

/// The five-LED panel: two yellow for cooling, two red for heating, one
/// blue in the middle for idle. Exactly one group is ever lit.
struct ActuatorState {
    int yellow_leds_on = 0; // 0..2
    int red_leds_on = 0;    // 0..2
    bool blue_led_on = false;

    bool operator==(const ActuatorState&) const = default;
};

/// CoolMax -> 2 yellow, CoolNormal -> 1 yellow, Off -> blue,
/// HeatNormal -> 1 red, HeatMax -> 2 red.
ActuatorState route(HvacState state);

/// Receives routed states in reading order from a single dispatching
/// thread. apply must be idempotent for repeated identical states and
/// returns false only when the sink could not take the update.
class ActuatorSink {
public:
    virtual ~ActuatorSink() = default;
    virtual bool apply(std::string_view timestamp, HvacState state, const ActuatorState& leds) = 0;
};

/// Writes `<timestamp> <state> yellow=<n> red=<n> blue=<0|1>` per update.
class LogSink : public ActuatorSink {
public:
    explicit LogSink(std::ostream& out) : out_(&out) {}
    bool apply(std::string_view timestamp, HvacState state, const ActuatorState& leds) override;

private:
    std::ostream* out_;
};

/// Keeps every update in memory; test and replay support.
class RecordingSink : public ActuatorSink {
public:
    struct Record {
        std::string timestamp;
        HvacState state;
        ActuatorState leds;
    };

    bool apply(std::string_view timestamp, HvacState state, const ActuatorState& leds) override;
    const std::vector<Record>& records() const { return records_; }

private:
    std::vector<Record> records_;
};

} // namespace fuzzyhvac
