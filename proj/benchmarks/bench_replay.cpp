// Compares the OpenMP batch replay against the serial reference on
// synthetic datasets built by tiling the bundled day with small
// perturbations (so no two readings defuzzify identically).

#include <benchmark/benchmark.h>

#include <vector>

#include "fuzzyhvac/config.hpp"
#include "fuzzyhvac/simulation.hpp"

#ifndef FUZZYHVAC_DATA_DIR
#define FUZZYHVAC_DATA_DIR "data"
#endif

namespace {

using namespace fuzzyhvac;

const Registry& registry() {
    static const Registry reg =
        parse_config_file(std::string(FUZZYHVAC_DATA_DIR) + "/climate.rules");
    return reg;
}

const ClimateController& controller() {
    static const ClimateController ctl(registry());
    return ctl;
}

std::vector<ClimateReading> synthetic_day(std::size_t n) {
    const std::vector<ClimateReading> day =
        load_day_csv(std::string(FUZZYHVAC_DATA_DIR) + "/day.csv");
    std::vector<ClimateReading> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        ClimateReading r = day[i % day.size()];
        const double jitter = 0.001 * static_cast<double>(i % 977);
        r.indoor_temp += jitter;
        r.outdoor_temp -= jitter;
        r.humidity = std::min(100.0, r.humidity + jitter);
        out.push_back(std::move(r));
    }
    return out;
}

void BM_replay_serial(benchmark::State& state) {
    const auto readings = synthetic_day(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        const ScheduleReport report = run_simulation_serial(readings, controller());
        benchmark::DoNotOptimize(report.entries.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_replay_openmp(benchmark::State& state) {
    const auto readings = synthetic_day(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        const ScheduleReport report = run_simulation(readings, controller());
        benchmark::DoNotOptimize(report.entries.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_replay_serial)->Arg(24)->Arg(1 << 10)->Arg(1 << 14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_replay_openmp)->Arg(24)->Arg(1 << 10)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
