#include "fuzzyhvac/simulation.hpp"

#include <cstdio>
#include <exception>
#include <sstream>

#include "fuzzyhvac/errors.hpp"

namespace fuzzyhvac {

std::string_view controller_name(ControllerKind kind) {
    return kind == ControllerKind::Fuzzy ? "fuzzy" : "baseline";
}

namespace {

ScheduleEntry score_one(const ClimateReading& r, const ClimateController& controller) {
    const HvacCommand cmd = controller.evaluate(
        ClimateInputs{r.outdoor_temp, r.humidity, r.indoor_temp});
    return ScheduleEntry{r.timestamp, cmd.state, cmd.action_value};
}

void require_nonempty(std::span<const ClimateReading> readings) {
    if (readings.empty()) {
        throw DataError("no readings to simulate");
    }
}

} // namespace

ScheduleReport run_simulation_serial(std::span<const ClimateReading> readings,
                                     const ClimateController& controller) {
    require_nonempty(readings);
    ScheduleReport report{ControllerKind::Fuzzy, {}};
    report.entries.reserve(readings.size());
    for (const ClimateReading& r : readings) {
        try {
            report.entries.push_back(score_one(r, controller));
        } catch (const Error& e) {
            throw DataError("at " + r.timestamp + ": " + e.what());
        }
    }
    return report;
}

ScheduleReport run_simulation(std::span<const ClimateReading> readings,
                              const ClimateController& controller) {
#ifdef _OPENMP
    require_nonempty(readings);
    ScheduleReport report{ControllerKind::Fuzzy, {}};
    report.entries.resize(readings.size());
    long first_error_idx = -1;
    std::string first_error;
    const auto n = static_cast<long>(readings.size());
    // Entries are independent and written by index, so the schedule comes
    // out bit-identical to the serial path for any thread count.
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        try {
            report.entries[static_cast<std::size_t>(i)] =
                score_one(readings[static_cast<std::size_t>(i)], controller);
        } catch (const Error& e) {
#pragma omp critical
            {
                if (first_error_idx < 0 || i < first_error_idx) {
                    first_error_idx = i;
                    first_error = e.what();
                }
            }
        }
    }
    if (first_error_idx >= 0) {
        throw DataError("at " + readings[static_cast<std::size_t>(first_error_idx)].timestamp +
                        ": " + first_error);
    }
    return report;
#else
    return run_simulation_serial(readings, controller);
#endif
}

ScheduleReport run_simulation(std::span<const ClimateReading> readings,
                              const ThresholdConfig& thresholds) {
    require_nonempty(readings);
    thresholds.validate();
    ScheduleReport report{ControllerKind::Baseline, {}};
    report.entries.reserve(readings.size());
    for (const ClimateReading& r : readings) {
        report.entries.push_back(
            ScheduleEntry{r.timestamp, baseline_decide(r.indoor_temp, thresholds), r.indoor_temp});
    }
    return report;
}

HourCounts count_hours(const ScheduleReport& report) {
    HourCounts counts;
    for (const ScheduleEntry& e : report.entries) {
        switch (e.state) {
        case HvacState::HeatMax:
            ++counts.heating_on;
            ++counts.heating_max;
            break;
        case HvacState::HeatNormal: ++counts.heating_on; break;
        case HvacState::Off: ++counts.off; break;
        case HvacState::CoolNormal: ++counts.cooling_on; break;
        case HvacState::CoolMax:
            ++counts.cooling_on;
            ++counts.cooling_max;
            break;
        }
    }
    return counts;
}

namespace {

std::optional<double> saving_pct(int base_on, int fuzzy_on) {
    if (base_on <= 0) {
        return std::nullopt;
    }
    return 100.0 * static_cast<double>(base_on - fuzzy_on) / static_cast<double>(base_on);
}

} // namespace

SavingsSummary compare(const ScheduleReport& base, const ScheduleReport& fuzzy) {
    if (base.entries.size() != fuzzy.entries.size()) {
        throw DataError("schedules cover different spans: " +
                        std::to_string(base.entries.size()) + " vs " +
                        std::to_string(fuzzy.entries.size()) + " entries");
    }
    for (std::size_t i = 0; i < base.entries.size(); ++i) {
        if (base.entries[i].timestamp != fuzzy.entries[i].timestamp) {
            throw DataError("schedules diverge at entry " + std::to_string(i) + ": '" +
                            base.entries[i].timestamp + "' vs '" + fuzzy.entries[i].timestamp +
                            "'");
        }
    }
    SavingsSummary summary;
    summary.base = count_hours(base);
    summary.fuzzy = count_hours(fuzzy);
    summary.heating_saving_pct = saving_pct(summary.base.heating_on, summary.fuzzy.heating_on);
    summary.cooling_saving_pct = saving_pct(summary.base.cooling_on, summary.fuzzy.cooling_on);
    summary.combined_saving_pct =
        saving_pct(summary.base.heating_on + summary.base.cooling_on,
                   summary.fuzzy.heating_on + summary.fuzzy.cooling_on);
    return summary;
}

std::string format_pct(double pct) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", pct);
    std::string s(buf);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') {
            s.pop_back();
        }
        if (s.back() == '.') {
            s.pop_back();
        }
    }
    return s;
}

ReportFormat report_format_from_name(std::string_view name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "csv") return ReportFormat::Csv;
    throw ConfigError("unknown report format '" + std::string(name) + "'");
}

namespace {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

void emit_counts(std::ostringstream& out, std::string_view label, const HourCounts& counts) {
    out << label << ": heating on " << counts.heating_on << " h (max power "
        << counts.heating_max << " h), cooling on " << counts.cooling_on << " h (max power "
        << counts.cooling_max << " h), off " << counts.off << " h\n";
}

void emit_saving(std::ostringstream& out, std::string_view label,
                 const std::optional<double>& pct) {
    out << label << " saving: ";
    if (pct) {
        out << format_pct(*pct) << "%\n";
    } else {
        out << "undefined (baseline never on)\n";
    }
}

} // namespace

std::string emit_report(std::span<const ScheduleReport> schedules, const SavingsSummary* summary,
                        ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "time,controller,state,action_value\n";
        for (const ScheduleReport& report : schedules) {
            for (const ScheduleEntry& e : report.entries) {
                out << e.timestamp << ',' << controller_name(report.controller) << ','
                    << state_name(e.state) << ',' << format_value(e.value) << '\n';
            }
        }
        return out.str();
    }

    for (const ScheduleReport& report : schedules) {
        out << "== " << controller_name(report.controller) << " schedule ==\n";
        for (const ScheduleEntry& e : report.entries) {
            out << e.timestamp << "  " << state_name(e.state) << "  " << format_value(e.value)
                << '\n';
        }
        emit_counts(out, controller_name(report.controller), count_hours(report));
        out << '\n';
    }
    if (summary != nullptr) {
        out << "== comparison ==\n";
        emit_counts(out, "baseline", summary->base);
        emit_counts(out, "fuzzy", summary->fuzzy);
        emit_saving(out, "heating", summary->heating_saving_pct);
        emit_saving(out, "cooling", summary->cooling_saving_pct);
        emit_saving(out, "combined", summary->combined_saving_pct);
    }
    return out.str();
}

} // namespace fuzzyhvac
