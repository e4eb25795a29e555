#include "fuzzyhvac/readings.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fuzzyhvac/errors.hpp"

namespace fuzzyhvac {

namespace {

constexpr std::string_view kHeader = "time,humidity,temp_outdoor,temp_indoor";

std::string strip(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
        s.pop_back();
    }
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
        ++i;
    }
    return s.substr(i);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(strip(cur));
    return out;
}

double parse_field(const std::string& field, int line_no, const char* what) {
    const char* begin = field.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (field.empty() || end != begin + field.size() || !std::isfinite(v)) {
        throw DataError("line " + std::to_string(line_no) + ": " + what + " value '" + field +
                        "' is not a finite number");
    }
    return v;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

} // namespace

std::vector<ClimateReading> parse_day_csv(const std::string& text,
                                          std::vector<std::string>* warnings) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool saw_header = false;
    std::vector<ClimateReading> readings;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = strip(line);
        if (stripped.empty()) {
            continue;
        }
        if (!saw_header) {
            if (stripped != kHeader) {
                throw DataError("line " + std::to_string(line_no) + ": expected header '" +
                                std::string(kHeader) + "', got '" + stripped + "'");
            }
            saw_header = true;
            continue;
        }
        const std::vector<std::string> fields = split_fields(stripped);
        if (fields.size() != 4) {
            throw DataError("line " + std::to_string(line_no) + ": expected 4 fields, got " +
                            std::to_string(fields.size()));
        }
        ClimateReading r;
        r.timestamp = fields[0];
        if (r.timestamp.empty()) {
            throw DataError("line " + std::to_string(line_no) + ": empty timestamp");
        }
        r.humidity = parse_field(fields[1], line_no, "humidity");
        r.outdoor_temp = parse_field(fields[2], line_no, "temp_outdoor");
        r.indoor_temp = parse_field(fields[3], line_no, "temp_indoor");
        if (r.humidity < 0.0 || r.humidity > 100.0) {
            if (warnings != nullptr) {
                warnings->push_back("line " + std::to_string(line_no) + ": humidity " +
                                    format_number(r.humidity) + " clamped to [0,100]");
            }
            r.humidity = std::min(std::max(r.humidity, 0.0), 100.0);
        }
        readings.push_back(std::move(r));
    }

    if (!saw_header) {
        throw DataError("no data rows: input is empty");
    }
    if (readings.empty()) {
        throw DataError("no data rows");
    }
    if (readings.size() != 24 && warnings != nullptr) {
        warnings->push_back("expected a 24-row day, got " + std::to_string(readings.size()) +
                            " rows");
    }
    return readings;
}

std::vector<ClimateReading> load_day_csv(const std::filesystem::path& path,
                                         std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open data file: " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_day_csv(ss.str(), warnings);
}

std::string readings_to_csv(std::span<const ClimateReading> readings) {
    std::ostringstream out;
    out << kHeader << '\n';
    for (const ClimateReading& r : readings) {
        out << r.timestamp << ',' << format_number(r.humidity) << ','
            << format_number(r.outdoor_temp) << ',' << format_number(r.indoor_temp) << '\n';
    }
    return out.str();
}

} // namespace fuzzyhvac
