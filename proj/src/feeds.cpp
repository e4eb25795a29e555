#include "fuzzyhvac/feeds.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "fuzzyhvac/errors.hpp"

namespace fuzzyhvac {

namespace {

using nlohmann::json;

double numeric_value(const json& v, const char* context) {
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        const char* begin = s.c_str();
        char* end = nullptr;
        const double parsed = std::strtod(begin, &end);
        if (!s.empty() && end == begin + s.size() && std::isfinite(parsed)) {
            return parsed;
        }
    }
    throw FeedError(std::string(context) + ": non-numeric value '" + v.dump() + "'");
}

json parse_json(const std::string& body, const char* context) {
    json doc = json::parse(body, nullptr, false);
    if (doc.is_discarded()) {
        throw FeedError(std::string(context) + ": invalid JSON");
    }
    return doc;
}

} // namespace

FeedSample parse_thingspeak_json(const std::string& body, const std::string& field) {
    const json doc = parse_json(body, "thingspeak feed");
    if (!doc.contains("feeds") || !doc["feeds"].is_array()) {
        throw FeedError("thingspeak feed: missing 'feeds' array");
    }
    const json& feeds = doc["feeds"];
    if (feeds.empty()) {
        throw FeedError("thingspeak feed: empty feeds array");
    }
    const json& newest = feeds.back(); // entries come oldest first
    if (!newest.contains(field)) {
        throw FeedError("thingspeak feed: missing field '" + field + "'");
    }
    FeedSample sample;
    sample.value = numeric_value(newest[field], "thingspeak feed");
    if (newest.contains("created_at") && newest["created_at"].is_string()) {
        sample.timestamp = newest["created_at"].get<std::string>();
    }
    return sample;
}

FeedSample parse_midgar_json(const std::string& body) {
    const json doc = parse_json(body, "midgar feed");
    if (!doc.is_object() || !doc.contains("value")) {
        throw FeedError("midgar feed: missing 'value'");
    }
    FeedSample sample;
    sample.value = numeric_value(doc["value"], "midgar feed");
    if (doc.contains("timestamp") && doc["timestamp"].is_string()) {
        sample.timestamp = doc["timestamp"].get<std::string>();
    }
    return sample;
}

FeedKind feed_kind_from_name(std::string_view name) {
    if (name == "thingspeak-like") return FeedKind::ThingSpeakLike;
    if (name == "midgar-like") return FeedKind::MidgarLike;
    if (name == "file") return FeedKind::File;
    throw ConfigError("unknown feed kind '" + std::string(name) +
                      "' (expected thingspeak-like, midgar-like or file)");
}

std::string_view feed_kind_name(FeedKind kind) {
    switch (kind) {
    case FeedKind::ThingSpeakLike: return "thingspeak-like";
    case FeedKind::MidgarLike: return "midgar-like";
    case FeedKind::File: return "file";
    }
    return "file";
}

std::optional<std::string> http_fetch(const std::string& url) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
        return std::nullopt;
    }
    const auto path_start = url.find('/', scheme_end + 3);
    const std::string base = path_start == std::string::npos ? url : url.substr(0, path_start);
    const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

    httplib::Client client(base);
    client.set_connection_timeout(5, 0);
    client.set_read_timeout(5, 0);
    client.set_write_timeout(5, 0);
    auto res = client.Get(path);
    if (!res || res->status < 200 || res->status >= 300) {
        return std::nullopt;
    }
    return res->body;
}

FeedPoller::FeedPoller(FeedSource source, FetchFn fetch, SleepFn sleep, WarnFn warn)
    : source_(std::move(source)),
      fetch_(fetch ? std::move(fetch) : FetchFn(http_fetch)),
      sleep_(sleep ? std::move(sleep)
                   : SleepFn([](double s) {
                         std::this_thread::sleep_for(std::chrono::duration<double>(s));
                     })),
      warn_(std::move(warn)) {
    if (source_.kind != FeedKind::File && source_.poll_interval_s <= 0.0) {
        throw ConfigError("poll interval must be > 0 for network feeds");
    }
    if (source_.kind == FeedKind::File) {
        const std::vector<ClimateReading> rows = load_day_csv(source_.endpoint);
        replay_.reserve(rows.size());
        for (const ClimateReading& r : rows) {
            double value = 0.0;
            if (source_.field == "humidity") {
                value = r.humidity;
            } else if (source_.field == "temp_outdoor") {
                value = r.outdoor_temp;
            } else if (source_.field == "temp_indoor") {
                value = r.indoor_temp;
            } else {
                throw ConfigError("file feed field must be one of humidity, temp_outdoor, "
                                  "temp_indoor; got '" +
                                  source_.field + "'");
            }
            replay_.push_back({r.timestamp, value});
        }
    }
}

std::optional<FeedSample> FeedPoller::poll_once() {
    if (source_.kind == FeedKind::File) {
        if (replay_pos_ >= replay_.size()) {
            exhausted_ = true;
            return std::nullopt;
        }
        return replay_[replay_pos_++];
    }

    double backoff = 0.5;
    for (int attempt = 1;; ++attempt) {
        const std::optional<std::string> body = fetch_(source_.endpoint);
        if (body) {
            try {
                return source_.kind == FeedKind::ThingSpeakLike
                           ? parse_thingspeak_json(*body, source_.field)
                           : parse_midgar_json(*body);
            } catch (const FeedError& e) {
                // The endpoint answered with an unusable payload; the consumer
                // carries on with its last known value.
                if (warn_) {
                    warn_(std::string(e.what()));
                }
                return std::nullopt;
            }
        }
        if (attempt >= source_.max_failures) {
            throw FeedError("feed '" + source_.endpoint + "' unreachable after " +
                            std::to_string(attempt) + " consecutive attempts");
        }
        sleep_(backoff);
        backoff = std::min(backoff * 2.0, 5.0);
    }
}

} // namespace fuzzyhvac
