#include <doctest.h>

#include <set>
#include <sstream>

#include "fuzzyhvac/actuators.hpp"
#include "fuzzyhvac/simulation.hpp"
#include "support.hpp"

using namespace fuzzyhvac;

namespace {

constexpr HvacState kAllStates[] = {HvacState::HeatMax, HvacState::HeatNormal, HvacState::Off,
                                    HvacState::CoolNormal, HvacState::CoolMax};

} // namespace

TEST_CASE("route: the five-LED mapping") {
    CHECK(route(HvacState::CoolMax) == ActuatorState{2, 0, false});
    CHECK(route(HvacState::CoolNormal) == ActuatorState{1, 0, false});
    CHECK(route(HvacState::Off) == ActuatorState{0, 0, true});
    CHECK(route(HvacState::HeatNormal) == ActuatorState{0, 1, false});
    CHECK(route(HvacState::HeatMax) == ActuatorState{0, 2, false});
}

TEST_CASE("route: total, injective, one group lit at a time") {
    std::set<std::tuple<int, int, bool>> seen;
    for (HvacState s : kAllStates) {
        const ActuatorState leds = route(s);
        CHECK(leds.yellow_leds_on >= 0);
        CHECK(leds.yellow_leds_on <= 2);
        CHECK(leds.red_leds_on >= 0);
        CHECK(leds.red_leds_on <= 2);
        const int groups_active = (leds.yellow_leds_on > 0 ? 1 : 0) +
                                  (leds.red_leds_on > 0 ? 1 : 0) + (leds.blue_led_on ? 1 : 0);
        CHECK(groups_active == 1);
        CHECK(seen.insert({leds.yellow_leds_on, leds.red_leds_on, leds.blue_led_on}).second);
    }
    CHECK(seen.size() == 5);
}

TEST_CASE("LogSink: one formatted line per update") {
    std::ostringstream out;
    LogSink sink(out);
    CHECK(sink.apply("17:00", HvacState::CoolMax, route(HvacState::CoolMax)));
    CHECK(sink.apply("12:00", HvacState::Off, route(HvacState::Off)));
    CHECK(out.str() == "17:00 cool_max yellow=2 red=0 blue=0\n"
                       "12:00 off yellow=0 red=0 blue=1\n");
}

TEST_CASE("RecordingSink: a replayed day yields exactly one state per reading") {
    const auto readings = testsupport::bundled_day();
    const ScheduleReport report =
        run_simulation(readings, testsupport::bundled_controller());

    RecordingSink sink;
    for (const ScheduleEntry& e : report.entries) {
        CHECK(sink.apply(e.timestamp, e.state, route(e.state)));
    }
    REQUIRE(sink.records().size() == readings.size());
    for (std::size_t i = 0; i < readings.size(); ++i) {
        CHECK(sink.records()[i].timestamp == readings[i].timestamp);
        CHECK(sink.records()[i].leds == route(report.entries[i].state));
    }
}

TEST_CASE("sinks tolerate repeated identical states") {
    RecordingSink sink;
    const ActuatorState leds = route(HvacState::Off);
    CHECK(sink.apply("00:00", HvacState::Off, leds));
    CHECK(sink.apply("00:00", HvacState::Off, leds));
    CHECK(sink.records().size() == 2);
    CHECK(sink.records()[0].leds == sink.records()[1].leds);
}
