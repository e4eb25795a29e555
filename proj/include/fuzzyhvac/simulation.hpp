#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzyhvac/baseline.hpp"
#include "fuzzyhvac/controller.hpp"
#include "fuzzyhvac/readings.hpp"

namespace fuzzyhvac {

enum class ControllerKind { Fuzzy, Baseline };

std::string_view controller_name(ControllerKind kind); // "fuzzy" | "baseline"

struct ScheduleEntry {
    std::string timestamp;
    HvacState state = HvacState::Off;
    // Crisp action value for the fuzzy controller; the indoor temperature
    // the threshold bands acted on for the baseline.
    double value = 0.0;
};

struct ScheduleReport {
    ControllerKind controller = ControllerKind::Fuzzy;
    std::vector<ScheduleEntry> entries; // one per reading, in input order
};

/// Open-loop replay: every reading is scored independently and commands
/// never feed back into the recorded indoor trajectory. Controller errors
/// are rethrown as DataError tagged with the offending timestamp.
///
/// The default entry point fans the readings out across OpenMP threads;
/// each entry is a pure function of its reading, so the output is
/// bit-identical to the serial reference whatever the thread count.
ScheduleReport run_simulation(std::span<const ClimateReading> readings,
                              const ClimateController& controller);

/// Single-threaded reference implementation, kept for differential tests
/// and as the fallback when OpenMP is compiled out.
ScheduleReport run_simulation_serial(std::span<const ClimateReading> readings,
                                     const ClimateController& controller);

ScheduleReport run_simulation(std::span<const ClimateReading> readings,
                              const ThresholdConfig& thresholds);

struct HourCounts {
    int heating_on = 0;
    int heating_max = 0;
    int cooling_on = 0;
    int cooling_max = 0;
    int off = 0;
};

/// Each reading stands for one hour; any non-Off state is an on-hour for
/// its system.
HourCounts count_hours(const ScheduleReport& report);

struct SavingsSummary {
    HourCounts base;
    HourCounts fuzzy;
    // (base_on - fuzzy_on) / base_on, in percent; empty when base_on == 0.
    std::optional<double> heating_saving_pct;
    std::optional<double> cooling_saving_pct;
    std::optional<double> combined_saving_pct;
};

/// Requires both reports to cover identical timestamps in order; throws
/// DataError naming the first divergence otherwise.
SavingsSummary compare(const ScheduleReport& base, const ScheduleReport& fuzzy);

/// Percentage rendering used by the reports: two decimals, trailing zeros
/// trimmed (27.27, 62.5, 0).
std::string format_pct(double pct);

enum class ReportFormat { Text, Csv };

ReportFormat report_format_from_name(std::string_view name);

/// CSV: `time,controller,state,action_value`, one row per schedule entry,
/// schedules concatenated in the order given. Text: per-state hour counts
/// per schedule, plus the savings block when a summary is present.
std::string emit_report(std::span<const ScheduleReport> schedules,
                        const SavingsSummary* summary, ReportFormat format);

} // namespace fuzzyhvac
