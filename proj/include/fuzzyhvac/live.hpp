#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fuzzyhvac/actuators.hpp"
#include "fuzzyhvac/controller.hpp"
#include "fuzzyhvac/feeds.hpp"

namespace fuzzyhvac {

/// Which controller input a feed drives.
enum class FeedRole { Humidity, Outdoor, Indoor };

FeedRole feed_role_from_name(std::string_view name);
std::string_view feed_role_name(FeedRole role);

struct BoundFeed {
    FeedSource source;
    FeedRole role = FeedRole::Humidity;
};

struct PollOptions {
    // Values used for inputs no feed has delivered yet.
    ClimateInputs initial{15.0, 50.0, 20.0};
    // Consecutive missed polls before a role is flagged stale. The last
    // known value keeps feeding the controller either way; the controller
    // always needs all three inputs.
    int stale_after_misses = 2;
    long max_ticks = -1; // <0: run until file feeds exhaust (or forever)
};

/// Single-threaded scheduler that polls each bound feed on its own
/// interval, folds samples into the current input set and streams one
/// routed decision per tick to the sink. Samples reach the sink strictly
/// in poll order.
class PollSession {
public:
    PollSession(const ClimateController& controller, std::vector<BoundFeed> feeds,
                ActuatorSink& sink, PollOptions options = {}, FeedPoller::FetchFn fetch = {},
                FeedPoller::SleepFn sleep = {}, FeedPoller::WarnFn warn = {});

    /// Runs the loop; returns the number of ticks processed. FeedError from
    /// an unreachable feed propagates to the caller.
    long run();

    const ClimateInputs& inputs() const { return inputs_; }

private:
    struct ScheduledFeed {
        FeedPoller poller;
        FeedRole role;
        double due = 0.0;
        int misses = 0;
        std::string last_timestamp;
    };

    const ClimateController* controller_;
    ActuatorSink* sink_;
    PollOptions options_;
    FeedPoller::SleepFn sleep_;
    FeedPoller::WarnFn warn_;
    std::vector<ScheduledFeed> feeds_;
    ClimateInputs inputs_;
};

} // namespace fuzzyhvac
