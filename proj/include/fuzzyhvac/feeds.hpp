#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyhvac/readings.hpp"

namespace fuzzyhvac {

struct FeedSample {
    std::string timestamp;
    double value = 0.0;
};

/// Channel-feed document: {"feeds":[{"created_at":..., "<field>": "66"}]}.
/// Returns the newest (last) entry. Distinct FeedError messages for invalid
/// JSON, an empty feeds array, a missing field and a non-numeric value.
FeedSample parse_thingspeak_json(const std::string& body, const std::string& field);

/// Single-sensor document: {"sensor": s, "value": v, "timestamp": iso}.
/// The value may be a number or a numeric string.
FeedSample parse_midgar_json(const std::string& body);

enum class FeedKind { ThingSpeakLike, MidgarLike, File };

FeedKind feed_kind_from_name(std::string_view name); // "thingspeak-like" | "midgar-like" | "file"
std::string_view feed_kind_name(FeedKind kind);

struct FeedSource {
    FeedKind kind = FeedKind::File;
    std::string endpoint;        // URL for network kinds, CSV path for file
    std::string field;           // JSON field (thingspeak-like) or CSV column (file)
    double poll_interval_s = 60.0;
    int max_failures = 3;        // consecutive fetch failures before giving up
};

/// Pull-based poller for one source. Network kinds fetch over HTTP GET
/// (5 s timeouts) and retry with doubling backoff inside a tick, throwing
/// FeedError once max_failures consecutive attempts fail. Payloads that
/// fetch fine but fail to parse count as a missed sample (nullopt), since
/// the consumer keeps running on its last known value. File sources replay
/// the selected CSV column row by row and report nullopt at end of data.
class FeedPoller {
public:
    using FetchFn = std::function<std::optional<std::string>(const std::string& endpoint)>;
    using SleepFn = std::function<void(double seconds)>;
    using WarnFn = std::function<void(const std::string&)>;

    explicit FeedPoller(FeedSource source, FetchFn fetch = {}, SleepFn sleep = {},
                        WarnFn warn = {});

    std::optional<FeedSample> poll_once();

    bool exhausted() const { return exhausted_; }
    const FeedSource& source() const { return source_; }

private:
    FeedSource source_;
    FetchFn fetch_;
    SleepFn sleep_;
    WarnFn warn_;
    std::vector<FeedSample> replay_;
    std::size_t replay_pos_ = 0;
    bool exhausted_ = false;
};

/// Plain HTTP GET with 5 s connection/read timeouts; nullopt on transport
/// failure or a non-2xx status.
std::optional<std::string> http_fetch(const std::string& url);

} // namespace fuzzyhvac
