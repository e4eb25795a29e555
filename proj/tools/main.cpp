#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzyhvac/config.hpp"
#include "fuzzyhvac/errors.hpp"
#include "fuzzyhvac/live.hpp"
#include "fuzzyhvac/simulation.hpp"

namespace {

using namespace fuzzyhvac;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitFeed = 3;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot write report to '" + path + "'");
    }
    out << content;
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const std::string& w : warnings) {
        std::cerr << "warning: " << w << '\n';
    }
}

struct SimulateArgs {
    std::string data_path;
    std::string config_path;
    std::string mode = "compare";
    std::string report_path;
    std::string format = "text";
    double centroid_step = 0.1;
    bool serial = false;
    ThresholdConfig thresholds;
};

int run_simulate(const SimulateArgs& args) {
    std::vector<std::string> warnings;
    const std::vector<ClimateReading> readings = load_day_csv(args.data_path, &warnings);
    print_warnings(warnings);

    const ReportFormat format = report_format_from_name(args.format);
    std::vector<ScheduleReport> schedules;
    std::optional<SavingsSummary> summary;

    if (args.mode == "baseline" || args.mode == "compare") {
        schedules.push_back(run_simulation(readings, args.thresholds));
    }
    if (args.mode == "fuzzy" || args.mode == "compare") {
        const Registry registry = parse_config_file(args.config_path);
        ControllerConfig cc;
        cc.centroid_step = args.centroid_step;
        const ClimateController controller(registry, cc);
        schedules.push_back(args.serial ? run_simulation_serial(readings, controller)
                                        : run_simulation(readings, controller));
    }
    if (args.mode == "compare") {
        summary = compare(schedules[0], schedules[1]);
    }

    write_output(args.report_path,
                 emit_report(schedules, summary ? &*summary : nullptr, format));
    return 0;
}

struct PollArgs {
    std::string config_path;
    std::vector<std::string> sources;
    std::vector<std::string> endpoints;
    std::vector<std::string> fields;
    std::vector<double> intervals;
    std::vector<std::string> roles;
    long max_ticks = -1;
    double centroid_step = 0.1;
    double initial_humidity = 50.0;
    double initial_outdoor = 15.0;
    double initial_indoor = 20.0;
    int max_failures = 3;
};

FeedRole default_role(FeedKind kind) {
    switch (kind) {
    case FeedKind::ThingSpeakLike: return FeedRole::Humidity; // the usual shared channel
    case FeedKind::MidgarLike: return FeedRole::Outdoor;
    case FeedKind::File: return FeedRole::Indoor;
    }
    return FeedRole::Humidity;
}

int run_poll(const PollArgs& args) {
    if (args.sources.empty()) {
        std::cerr << "poll: at least one --source is required\n";
        return kExitUsage;
    }
    if (args.endpoints.size() != args.sources.size()) {
        std::cerr << "poll: need one --endpoint per --source\n";
        return kExitUsage;
    }
    if (args.sources.size() > 3 || args.roles.size() > args.sources.size() ||
        args.fields.size() > args.sources.size() ||
        args.intervals.size() > args.sources.size()) {
        std::cerr << "poll: up to three feeds, with at most one --field/--interval/--role each\n";
        return kExitUsage;
    }

    std::vector<BoundFeed> feeds;
    for (std::size_t i = 0; i < args.sources.size(); ++i) {
        FeedSource source;
        source.kind = feed_kind_from_name(args.sources[i]);
        source.endpoint = args.endpoints[i];
        source.field = i < args.fields.size() ? args.fields[i] : std::string();
        source.poll_interval_s = i < args.intervals.size() ? args.intervals[i] : 60.0;
        source.max_failures = args.max_failures;
        if (source.kind == FeedKind::File && source.field.empty()) {
            source.field = "temp_indoor";
        }
        const FeedRole role = i < args.roles.size() ? feed_role_from_name(args.roles[i])
                                                    : default_role(source.kind);
        feeds.push_back(BoundFeed{std::move(source), role});
    }

    const Registry registry = parse_config_file(args.config_path);
    ControllerConfig cc;
    cc.centroid_step = args.centroid_step;
    const ClimateController controller(registry, cc);

    PollOptions options;
    options.initial = ClimateInputs{args.initial_outdoor, args.initial_humidity,
                                    args.initial_indoor};
    options.max_ticks = args.max_ticks;

    LogSink sink(std::cout);
    PollSession session(controller, std::move(feeds), sink, options, {}, {},
                        [](const std::string& msg) { std::cerr << "warning: " << msg << '\n'; });
    session.run();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuzzy HVAC decision engine and day-replay simulator"};
    app.require_subcommand(1);

    SimulateArgs sim;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Replay a day of readings through the fuzzy and/or threshold controller");
    simulate->add_option("--data", sim.data_path, "CSV with time,humidity,temp_outdoor,temp_indoor")
        ->required();
    simulate->add_option("--config", sim.config_path, "Variables/rules file")->required();
    simulate->add_option("--mode", sim.mode, "fuzzy, baseline or compare")
        ->check(CLI::IsMember({"fuzzy", "baseline", "compare"}))
        ->capture_default_str();
    simulate->add_option("--report", sim.report_path, "Write the report here instead of stdout");
    simulate->add_option("--format", sim.format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}))
        ->capture_default_str();
    simulate->add_option("--centroid-step", sim.centroid_step, "Defuzzification grid step")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate->add_flag("--serial", sim.serial, "Use the single-threaded reference loop");
    simulate->add_option("--heat-max-below", sim.thresholds.heat_max_below,
                         "Baseline: heat at max power below this indoor temperature");
    simulate
        ->add_option("--heat-normal", sim.thresholds.heat_normal_range,
                     "Baseline: heat at normal power inside this band (lo hi)")
        ->expected(2)
        ->delimiter(':');
    simulate
        ->add_option("--off", sim.thresholds.off_range, "Baseline: both systems off inside (lo hi)")
        ->expected(2)
        ->delimiter(':');
    simulate
        ->add_option("--cool-normal", sim.thresholds.cool_normal_range,
                     "Baseline: cool at normal power inside (lo hi)")
        ->expected(2)
        ->delimiter(':');
    simulate->add_option("--cool-max-above", sim.thresholds.cool_max_above,
                         "Baseline: cool at max power above this indoor temperature");

    PollArgs poll;
    CLI::App* pollcmd =
        app.add_subcommand("poll", "Poll live feeds and stream decisions to the log sink");
    pollcmd->add_option("--config", poll.config_path, "Variables/rules file")->required();
    pollcmd->add_option("--source", poll.sources,
                        "Feed kind (thingspeak-like, midgar-like, file); repeat for more feeds");
    pollcmd->add_option("--endpoint", poll.endpoints, "URL or CSV path, one per source");
    pollcmd->add_option("--field", poll.fields, "JSON field or CSV column, one per source");
    pollcmd->add_option("--interval", poll.intervals, "Poll interval in seconds, one per source");
    pollcmd->add_option("--role", poll.roles,
                        "Which input the feed drives: humidity, outdoor or indoor");
    pollcmd->add_option("--max-ticks", poll.max_ticks, "Stop after this many ticks (<0: run on)");
    pollcmd->add_option("--centroid-step", poll.centroid_step, "Defuzzification grid step")
        ->check(CLI::PositiveNumber);
    pollcmd->add_option("--initial-humidity", poll.initial_humidity,
                        "Humidity before the first sample arrives");
    pollcmd->add_option("--initial-outdoor", poll.initial_outdoor,
                        "Outdoor temperature before the first sample arrives");
    pollcmd->add_option("--initial-indoor", poll.initial_indoor,
                        "Indoor temperature before the first sample arrives");
    pollcmd->add_option("--max-failures", poll.max_failures,
                        "Consecutive fetch failures before a feed is declared dead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (simulate->parsed()) {
            return run_simulate(sim);
        }
        return run_poll(poll);
    } catch (const FeedError& e) {
        std::cerr << "feed error: " << e.what() << '\n';
        return kExitFeed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
}
