#include "fuzzyhvac/live.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "fuzzyhvac/errors.hpp"

namespace fuzzyhvac {

FeedRole feed_role_from_name(std::string_view name) {
    if (name == "humidity") return FeedRole::Humidity;
    if (name == "outdoor") return FeedRole::Outdoor;
    if (name == "indoor") return FeedRole::Indoor;
    throw ConfigError("unknown feed role '" + std::string(name) +
                      "' (expected humidity, outdoor or indoor)");
}

std::string_view feed_role_name(FeedRole role) {
    switch (role) {
    case FeedRole::Humidity: return "humidity";
    case FeedRole::Outdoor: return "outdoor";
    case FeedRole::Indoor: return "indoor";
    }
    return "humidity";
}

PollSession::PollSession(const ClimateController& controller, std::vector<BoundFeed> feeds,
                         ActuatorSink& sink, PollOptions options, FeedPoller::FetchFn fetch,
                         FeedPoller::SleepFn sleep, FeedPoller::WarnFn warn)
    : controller_(&controller),
      sink_(&sink),
      options_(options),
      sleep_(sleep ? std::move(sleep)
                   : FeedPoller::SleepFn([](double s) {
                         std::this_thread::sleep_for(std::chrono::duration<double>(s));
                     })),
      warn_(std::move(warn)),
      inputs_(options.initial) {
    if (feeds.empty()) {
        throw ConfigError("poll session needs at least one feed");
    }
    for (BoundFeed& bf : feeds) {
        feeds_.push_back(ScheduledFeed{FeedPoller(std::move(bf.source), fetch, sleep_, warn_),
                                       bf.role, 0.0, 0, {}});
    }
}

long PollSession::run() {
    long ticks = 0;
    double now = 0.0; // virtual clock; advanced by the sleeps we issue
    while (options_.max_ticks < 0 || ticks < options_.max_ticks) {
        auto next = std::min_element(feeds_.begin(), feeds_.end(),
                                     [](const auto& a, const auto& b) { return a.due < b.due; });
        ScheduledFeed& feed = *next;
        if (feed.due > now) {
            sleep_(feed.due - now);
            now = feed.due;
        }
        feed.due = now + feed.poller.source().poll_interval_s;

        const std::optional<FeedSample> sample = feed.poller.poll_once();
        if (sample) {
            feed.misses = 0;
            feed.last_timestamp = sample->timestamp;
            switch (feed.role) {
            case FeedRole::Humidity: inputs_.outdoor_humidity = sample->value; break;
            case FeedRole::Outdoor: inputs_.outdoor_temp = sample->value; break;
            case FeedRole::Indoor: inputs_.indoor_temp = sample->value; break;
            }
        } else {
            if (feed.poller.exhausted()) {
                const bool all_done =
                    std::all_of(feeds_.begin(), feeds_.end(),
                                [](const auto& f) { return f.poller.exhausted(); });
                if (all_done) {
                    break;
                }
                continue;
            }
            ++feed.misses;
            if (feed.misses >= options_.stale_after_misses && warn_) {
                warn_("feed for " + std::string(feed_role_name(feed.role)) + " stale after " +
                      std::to_string(feed.misses) + " missed polls; reusing last known value");
            }
        }

        const HvacCommand cmd = controller_->evaluate(inputs_);
        const std::string timestamp =
            !feed.last_timestamp.empty() ? feed.last_timestamp : "tick-" + std::to_string(ticks);
        sink_->apply(timestamp, cmd.state, route(cmd.state));
        ++ticks;
    }
    return ticks;
}

} // namespace fuzzyhvac
