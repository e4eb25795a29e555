#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace fuzzyhvac {

/// One timestamped ambient sample, the common shape every source is
/// normalized to.
struct ClimateReading {
    std::string timestamp; // wall-clock "hh:mm" or an ISO-8601 instant
    double humidity = 0.0; // % relative, clamped to [0,100] on load
    double outdoor_temp = 0.0;
    double indoor_temp = 0.0;

    bool operator==(const ClimateReading&) const = default;
};

/// Reads a `time,humidity,temp_outdoor,temp_indoor` CSV. Malformed rows
/// raise DataError with the line number; recoverable oddities (humidity
/// clamped, a day that is not 24 rows) are appended to *warnings.
std::vector<ClimateReading> load_day_csv(const std::filesystem::path& path,
                                         std::vector<std::string>* warnings = nullptr);

std::vector<ClimateReading> parse_day_csv(const std::string& text,
                                          std::vector<std::string>* warnings = nullptr);

/// Inverse of the loader; integer-valued fields serialize without a
/// decimal point so a loaded fixture reproduces its file byte for byte.
std::string readings_to_csv(std::span<const ClimateReading> readings);

} // namespace fuzzyhvac
