#include <doctest.h>

#include <fstream>

#include "fuzzyhvac/errors.hpp"
#include "fuzzyhvac/feeds.hpp"
#include "fuzzyhvac/readings.hpp"
#include "support.hpp"

using namespace fuzzyhvac;

TEST_CASE("load_day_csv: bundled fixture") {
    std::vector<std::string> warnings;
    const auto readings = load_day_csv(testsupport::data_path("day.csv"), &warnings);
    REQUIRE(readings.size() == 24);
    CHECK(warnings.empty());

    CHECK(readings[0] == ClimateReading{"00:00", 66.0, 15.0, 18.0});
    CHECK(readings[5] == ClimateReading{"05:00", 78.0, 9.0, 14.0});
    CHECK(readings[23].timestamp == "23:00");
}

TEST_CASE("parse_day_csv: error and warning paths") {
    CHECK_THROWS_WITH_AS(parse_day_csv(""), "no data rows: input is empty", DataError);
    CHECK_THROWS_WITH_AS(parse_day_csv("time,humidity,temp_outdoor,temp_indoor\n"),
                         "no data rows", DataError);

    CHECK_THROWS_WITH(parse_day_csv("time,humidity\n"), doctest::Contains("expected header"));

    // malformed row names its line
    CHECK_THROWS_WITH(
        parse_day_csv("time,humidity,temp_outdoor,temp_indoor\n00:00,66,15\n"),
        doctest::Contains("line 2"));
    CHECK_THROWS_WITH(
        parse_day_csv("time,humidity,temp_outdoor,temp_indoor\n00:00,66,abc,18\n"),
        doctest::Contains("'abc'"));
    CHECK_THROWS_WITH(
        parse_day_csv("time,humidity,temp_outdoor,temp_indoor\n00:00,66,nan,18\n"),
        doctest::Contains("finite"));

    // short day is accepted with a warning
    std::vector<std::string> warnings;
    const auto rows =
        parse_day_csv("time,humidity,temp_outdoor,temp_indoor\n00:00,66,15,18\n", &warnings);
    CHECK(rows.size() == 1);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0] == "expected a 24-row day, got 1 rows");

    // out-of-range humidity is clamped with a warning
    warnings.clear();
    const auto clamped =
        parse_day_csv("time,humidity,temp_outdoor,temp_indoor\n00:00,104,15,18\n", &warnings);
    CHECK(clamped[0].humidity == 100.0);
    REQUIRE(warnings.size() == 2); // clamp + short day
    CHECK(warnings[0] == "line 2: humidity 104 clamped to [0,100]");
}

TEST_CASE("readings round-trip the fixture byte for byte") {
    std::ifstream in(testsupport::data_path("day.csv"), std::ios::binary);
    REQUIRE(in);
    const std::string original((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    const auto readings = parse_day_csv(original);
    CHECK(readings_to_csv(readings) == original);
}

TEST_CASE("parse_thingspeak_json") {
    const FeedSample sample = parse_thingspeak_json(
        R"({"feeds":[{"created_at":"2016-05-01T00:00:00Z","field1":"66"}]})", "field1");
    CHECK(sample.timestamp == "2016-05-01T00:00:00Z");
    CHECK(sample.value == 66.0);

    // newest entry wins
    const FeedSample newest = parse_thingspeak_json(
        R"({"feeds":[{"created_at":"t0","field1":"10"},{"created_at":"t1","field1":"20"}]})",
        "field1");
    CHECK(newest.timestamp == "t1");
    CHECK(newest.value == 20.0);

    // plain numbers are fine too
    CHECK(parse_thingspeak_json(R"({"feeds":[{"field1":66.5}]})", "field1").value == 66.5);

    CHECK_THROWS_WITH(parse_thingspeak_json(R"({"feeds":[]})", "field1"),
                      doctest::Contains("empty feeds array"));
    CHECK_THROWS_WITH(parse_thingspeak_json(R"({"feeds":[{"field2":"1"}]})", "field1"),
                      doctest::Contains("missing field 'field1'"));
    CHECK_THROWS_WITH(parse_thingspeak_json(R"({"feeds":[{"field1":"abc"}]})", "field1"),
                      doctest::Contains("non-numeric"));
    CHECK_THROWS_WITH(parse_thingspeak_json("{}", "field1"),
                      doctest::Contains("missing 'feeds'"));
    CHECK_THROWS_WITH(parse_thingspeak_json("not json", "field1"),
                      doctest::Contains("invalid JSON"));
}

TEST_CASE("parse_midgar_json") {
    const FeedSample sample = parse_midgar_json(
        R"({"sensor":"tmp36-1","value":15.5,"timestamp":"2016-05-01T00:00:00Z"})");
    CHECK(sample.value == 15.5);
    CHECK(sample.timestamp == "2016-05-01T00:00:00Z");

    // numeric strings are coerced
    CHECK(parse_midgar_json(R"({"sensor":"s","value":"15","timestamp":"t"})").value == 15.0);

    CHECK_THROWS_WITH(parse_midgar_json(R"({"sensor":"s","timestamp":"t"})"),
                      doctest::Contains("missing 'value'"));
    CHECK_THROWS_WITH(parse_midgar_json(R"({"sensor":"s","value":"x","timestamp":"t"})"),
                      doctest::Contains("non-numeric"));
    CHECK_THROWS_WITH(parse_midgar_json("[1,2]"), doctest::Contains("missing 'value'"));
}

TEST_CASE("FeedPoller: file feeds replay one column in order") {
    FeedSource source;
    source.kind = FeedKind::File;
    source.endpoint = testsupport::data_path("day.csv");
    source.field = "temp_indoor";
    FeedPoller poller(source);

    auto first = poller.poll_once();
    REQUIRE(first.has_value());
    CHECK(first->timestamp == "00:00");
    CHECK(first->value == 18.0);
    auto second = poller.poll_once();
    CHECK(second->value == 17.0);

    for (int i = 2; i < 24; ++i) {
        CHECK(poller.poll_once().has_value());
    }
    CHECK_FALSE(poller.exhausted());
    CHECK_FALSE(poller.poll_once().has_value());
    CHECK(poller.exhausted());

    FeedSource bad = source;
    bad.field = "pressure";
    CHECK_THROWS_AS(FeedPoller{bad}, ConfigError);
}

TEST_CASE("FeedPoller: network feed with injected fetch") {
    FeedSource source;
    source.kind = FeedKind::MidgarLike;
    source.endpoint = "http://sensor.local/value";
    source.poll_interval_s = 1.0;
    source.max_failures = 3;

    SUBCASE("success after one transient failure, with one backoff sleep") {
        int calls = 0;
        std::vector<double> slept;
        FeedPoller poller(
            source,
            [&calls](const std::string&) -> std::optional<std::string> {
                ++calls;
                if (calls == 1) {
                    return std::nullopt;
                }
                return R"({"sensor":"s","value":12,"timestamp":"t"})";
            },
            [&slept](double s) { slept.push_back(s); });
        const auto sample = poller.poll_once();
        REQUIRE(sample.has_value());
        CHECK(sample->value == 12.0);
        CHECK(calls == 2);
        CHECK(slept == std::vector<double>{0.5});
    }

    SUBCASE("surfaces after three consecutive failures") {
        int calls = 0;
        std::vector<double> slept;
        FeedPoller poller(
            source, [&calls](const std::string&) -> std::optional<std::string> {
                ++calls;
                return std::nullopt;
            },
            [&slept](double s) { slept.push_back(s); });
        CHECK_THROWS_WITH_AS(poller.poll_once(),
                             "feed 'http://sensor.local/value' unreachable after 3 consecutive "
                             "attempts",
                             FeedError);
        CHECK(calls == 3);
        CHECK(slept == std::vector<double>{0.5, 1.0}); // doubling backoff between attempts
    }

    SUBCASE("unusable payload is a soft miss") {
        std::string warned;
        FeedPoller poller(
            source,
            [](const std::string&) -> std::optional<std::string> { return "not json"; },
            [](double) {}, [&warned](const std::string& w) { warned = w; });
        CHECK_FALSE(poller.poll_once().has_value());
        CHECK(warned == "midgar feed: invalid JSON");
        CHECK_FALSE(poller.exhausted());
    }
}

TEST_CASE("FeedPoller: rejects a non-positive interval for network kinds") {
    FeedSource source;
    source.kind = FeedKind::ThingSpeakLike;
    source.endpoint = "http://x/feed.json";
    source.poll_interval_s = 0.0;
    CHECK_THROWS_AS(FeedPoller{source}, ConfigError);
}

TEST_CASE("feed kind and role names round-trip") {
    for (FeedKind k : {FeedKind::ThingSpeakLike, FeedKind::MidgarLike, FeedKind::File}) {
        CHECK(feed_kind_from_name(feed_kind_name(k)) == k);
    }
    CHECK_THROWS_AS(feed_kind_from_name("mqtt"), ConfigError);
}
