#pragma once

#include <string>

#include "fuzzyhvac/config.hpp"
#include "fuzzyhvac/controller.hpp"
#include "fuzzyhvac/readings.hpp"

#ifndef FUZZYHVAC_DATA_DIR
#define FUZZYHVAC_DATA_DIR "data"
#endif

namespace testsupport {

inline std::string data_path(const std::string& name) {
    return std::string(FUZZYHVAC_DATA_DIR) + "/" + name;
}

inline const fuzzyhvac::Registry& bundled_registry() {
    static const fuzzyhvac::Registry registry =
        fuzzyhvac::parse_config_file(data_path("climate.rules"));
    return registry;
}

inline const fuzzyhvac::ClimateController& bundled_controller() {
    static const fuzzyhvac::ClimateController controller(bundled_registry());
    return controller;
}

inline std::vector<fuzzyhvac::ClimateReading> bundled_day() {
    return fuzzyhvac::load_day_csv(data_path("day.csv"));
}

} // namespace testsupport
