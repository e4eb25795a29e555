#include <doctest.h>

#include <cmath>

#include "fuzzyhvac/errors.hpp"
#include "fuzzyhvac/variable.hpp"
#include "support.hpp"
#include "test_oracle.hpp"

using namespace fuzzyhvac;

TEST_CASE("membership: trapezoid regions") {
    const PiecewiseLinearMF mf{14, 18, 22, 24};
    CHECK(membership(mf, 19.0) == 1.0);
    CHECK(membership(mf, 23.0) == 0.5);
    CHECK(membership(mf, 13.0) == 0.0);
    CHECK(membership(mf, 16.0) == 0.5);
    CHECK(membership(mf, 24.0) == 0.0);
    CHECK(membership(mf, 14.0) == 0.0);
}

TEST_CASE("membership: degenerate segments act as plateau") {
    const PiecewiseLinearMF left{0, 0, 10, 15}; // shoulder at the low edge
    CHECK(membership(left, 0.0) == 1.0);
    CHECK(membership(left, 5.0) == 1.0);
    CHECK(membership(left, 12.5) == 0.5);
    CHECK(membership(left, 15.0) == 0.0);

    const PiecewiseLinearMF right{35, 38, 50, 50};
    CHECK(membership(right, 50.0) == 1.0);
    CHECK(membership(right, 36.5) == 0.5);
    CHECK(membership(right, 34.0) == 0.0);

    const PiecewiseLinearMF triangle{18, 20, 20, 22};
    CHECK(membership(triangle, 20.0) == 1.0);
    CHECK(membership(triangle, 19.0) == 0.5);
}

TEST_CASE("membership: bounded and continuous") {
    const PiecewiseLinearMF mf{-7, -5, 0, 3};
    double prev = membership(mf, -15.0);
    for (double x = -14.99; x <= 50.0; x += 0.01) {
        const double m = membership(mf, x);
        CHECK(m >= 0.0);
        CHECK(m <= 1.0);
        CHECK(std::abs(m - prev) < 0.011); // max slope is 1/2 per unit
        prev = m;
    }
}

TEST_CASE("fuzzify: temperature and humidity breakpoints") {
    const Registry& reg = testsupport::bundled_registry();
    const LinguisticVariable& outdoor = reg.variable("outdoor");
    const LinguisticVariable& humidity = reg.variable("humidity");

    const FuzzyValue t16 = fuzzify(outdoor, 16.0);
    CHECK(t16.degree("low") == 0.5);
    CHECK(t16.degree("normal") == 0.5);
    CHECK(t16.degree("extremely_low") == 0.0);
    CHECK(t16.degree("high") == 0.0);

    const FuzzyValue h66 = fuzzify(humidity, 66.0);
    CHECK(h66.degree("normal") == doctest::Approx(0.4));
    CHECK(h66.degree("high") == doctest::Approx(0.6));
    CHECK(h66.degree("very_low") == 0.0);
    CHECK(h66.degree("very_high") == 0.0);

    const FuzzyValue cold = fuzzify(outdoor, -15.0);
    CHECK(cold.degree("extremely_low") == 1.0);
    CHECK(cold.degree("very_low") == 0.0);
}

TEST_CASE("fuzzify: clamps out-of-universe inputs and flags it") {
    const LinguisticVariable& outdoor = testsupport::bundled_registry().variable("outdoor");
    bool clamped = false;
    const FuzzyValue fv = fuzzify(outdoor, -40.0, &clamped);
    CHECK(clamped);
    CHECK(fv.degree("extremely_low") == 1.0);

    clamped = true;
    fuzzify(outdoor, 20.0, &clamped);
    CHECK_FALSE(clamped);

    bool high_clamp = false;
    const FuzzyValue hot = fuzzify(outdoor, 99.0, &high_clamp);
    CHECK(high_clamp);
    CHECK(hot.degree("extremely_high") == 1.0);
}

TEST_CASE("fuzzify: every in-universe value hits at least one term") {
    const Registry& reg = testsupport::bundled_registry();
    for (const auto& var : reg.variables()) {
        for (double x = var.lo(); x <= var.hi() + 1e-9; x += 0.1) {
            const FuzzyValue fv = fuzzify(var, std::min(x, var.hi()));
            CHECK(fv.any());
        }
    }
}

TEST_CASE("evaluate_rules: single-cell firings match the table") {
    const Registry& reg = testsupport::bundled_registry();
    const RuleBase& rb = reg.rulebase("apparent");

    FuzzyValue hum(reg.variable("humidity"));
    FuzzyValue out(reg.variable("outdoor"));
    hum[*reg.variable("humidity").term_index("very_high")] = 1.0;
    out[*reg.variable("outdoor").term_index("high")] = 1.0;

    std::vector<FuzzyValue> inputs{hum, out};
    const FuzzyValue result = reg.evaluate_rules(rb, inputs);
    CHECK(result.degree("extremely_high") == 1.0);
    CHECK(result.degree("very_high") == 0.0);
    CHECK(result.degree("normal") == 0.0);

    FuzzyValue hum2(reg.variable("humidity"));
    FuzzyValue out2(reg.variable("outdoor"));
    hum2[*reg.variable("humidity").term_index("low")] = 1.0;
    out2[*reg.variable("outdoor").term_index("low")] = 1.0;
    std::vector<FuzzyValue> inputs2{hum2, out2};
    const FuzzyValue result2 = reg.evaluate_rules(rb, inputs2);
    CHECK(result2.degree("low") == 1.0);
    CHECK(result2.degree("normal") == 0.0);
}

TEST_CASE("evaluate_rules: zero inputs produce zero outputs") {
    const Registry& reg = testsupport::bundled_registry();
    const RuleBase& rb = reg.rulebase("command");
    std::vector<FuzzyValue> inputs{FuzzyValue(reg.variable("outdoor")),
                                   FuzzyValue(reg.variable("indoor"))};
    const FuzzyValue result = reg.evaluate_rules(rb, inputs);
    CHECK_FALSE(result.any());
}

TEST_CASE("evaluate_rules: missing input is a configuration error") {
    const Registry& reg = testsupport::bundled_registry();
    const RuleBase& rb = reg.rulebase("apparent");
    std::map<std::string, FuzzyValue> inputs;
    inputs.emplace("humidity", FuzzyValue(reg.variable("humidity")));
    CHECK_THROWS_AS(reg.evaluate_rules(rb, inputs), ConfigError);
    CHECK_THROWS_WITH(reg.evaluate_rules(rb, inputs),
                      doctest::Contains("missing an input for variable 'outdoor'"));
}

TEST_CASE("evaluate_rules: output degrees never exceed the largest input degree") {
    const Registry& reg = testsupport::bundled_registry();
    const RuleBase& rb = reg.rulebase("apparent");
    const LinguisticVariable& hum_var = reg.variable("humidity");
    const LinguisticVariable& out_var = reg.variable("outdoor");

    testoracle::UniformSource rnd(7u);
    for (int i = 0; i < 200; ++i) {
        FuzzyValue hum(hum_var);
        FuzzyValue out(out_var);
        double max_in = 0.0;
        for (std::size_t t = 0; t < hum.size(); ++t) {
            hum[t] = rnd.next();
            max_in = std::max(max_in, hum[t]);
        }
        for (std::size_t t = 0; t < out.size(); ++t) {
            out[t] = rnd.next();
            max_in = std::max(max_in, out[t]);
        }
        std::vector<FuzzyValue> inputs{hum, out};
        const FuzzyValue result = reg.evaluate_rules(rb, inputs);
        for (std::size_t t = 0; t < result.size(); ++t) {
            CHECK(result[t] <= max_in + 1e-15);
        }
    }
}

TEST_CASE("defuzzify_centroid: symmetric shapes sit on their axis") {
    const LinguisticVariable single("deviation", 18.0, 22.0,
                                    {{"off", PiecewiseLinearMF{18, 20, 20, 22}}});
    FuzzyValue fv(single);
    fv[0] = 1.0;
    CHECK(defuzzify_centroid(single, fv, 0.1) == doctest::Approx(20.0).epsilon(0.0025));

    const Registry& reg = testsupport::bundled_registry();
    const LinguisticVariable& action = reg.variable("action");
    FuzzyValue off_only(action);
    off_only[*action.term_index("no_system")] = 1.0;
    CHECK(defuzzify_centroid(action, off_only, 0.1) == doctest::Approx(20.0).epsilon(0.005));
}

TEST_CASE("defuzzify_centroid: heat_normal/no_system blend, value frozen from the fine grid") {
    const Registry& reg = testsupport::bundled_registry();
    const LinguisticVariable& action = reg.variable("action");
    FuzzyValue fv(action);
    fv[*action.term_index("heat_normal")] = 0.5;
    fv[*action.term_index("no_system")] = 0.5;

    const double crisp = defuzzify_centroid(action, fv, 0.1);
    CHECK(crisp > 15.0);
    CHECK(crisp < 20.0);
    CHECK(crisp == doctest::Approx(16.3537).epsilon(1e-4)); // 0.001-grid reference value

    std::vector<double> degrees(action.terms().size(), 0.0);
    degrees[*action.term_index("heat_normal")] = 0.5;
    degrees[*action.term_index("no_system")] = 0.5;
    CHECK(std::abs(crisp - testoracle::centroid(action, degrees)) < 0.05);
}

TEST_CASE("defuzzify_centroid: all-zero value means no rule fired") {
    const Registry& reg = testsupport::bundled_registry();
    const LinguisticVariable& action = reg.variable("action");
    FuzzyValue fv(action);
    CHECK_THROWS_AS(defuzzify_centroid(action, fv, 0.1), NoRuleFired);
    FuzzyValue ok(action);
    ok[0] = 0.5;
    CHECK_THROWS_AS(defuzzify_centroid(action, ok, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(defuzzify_centroid(action, ok, -1.0), std::invalid_argument);
}

TEST_CASE("defuzzify_centroid: coarse grid agrees with the 0.001 reference") {
    const Registry& reg = testsupport::bundled_registry();
    testoracle::UniformSource rnd(12345u);
    for (const auto& var : reg.variables()) {
        for (int i = 0; i < 25; ++i) {
            const std::vector<double> degrees = rnd.random_degrees(var.terms().size());
            FuzzyValue fv(var);
            for (std::size_t t = 0; t < degrees.size(); ++t) {
                fv[t] = degrees[t];
            }
            const double fast = defuzzify_centroid(var, fv, 0.1);
            const double fine = testoracle::centroid(var, degrees);
            CHECK(std::abs(fast - fine) < 0.05);
            CHECK(fast >= var.lo());
            CHECK(fast <= var.hi());
        }
    }
}

TEST_CASE("defuzzify_centroid: deterministic across calls") {
    const Registry& reg = testsupport::bundled_registry();
    const LinguisticVariable& outdoor = reg.variable("outdoor");
    FuzzyValue fv(outdoor);
    fv[*outdoor.term_index("low")] = 0.6;
    fv[*outdoor.term_index("normal")] = 0.25;
    const double first = defuzzify_centroid(outdoor, fv, 0.1);
    for (int i = 0; i < 5; ++i) {
        CHECK(defuzzify_centroid(outdoor, fv, 0.1) == first);
    }
}

TEST_CASE("linguistic variable: construction rejects broken shapes") {
    using Terms = std::vector<Term>;
    // b > c
    CHECK_THROWS_AS(LinguisticVariable("v", 0, 10, Terms{{"t", {0, 6, 4, 10}}}), ConfigError);
    // support outside the universe
    CHECK_THROWS_AS(LinguisticVariable("v", 0, 10, Terms{{"t", {-1, 0, 10, 10}}}), ConfigError);
    // duplicate term names
    CHECK_THROWS_AS(
        LinguisticVariable("v", 0, 10, Terms{{"t", {0, 0, 5, 6}}, {"t", {5, 6, 10, 10}}}),
        ConfigError);
    // coverage hole between the two terms
    CHECK_THROWS_AS(
        LinguisticVariable("v", 0, 10, Terms{{"a", {0, 0, 2, 3}}, {"b", {7, 8, 10, 10}}}),
        ConfigError);
    // empty range
    CHECK_THROWS_AS(LinguisticVariable("v", 5, 5, Terms{{"t", {5, 5, 5, 5}}}), ConfigError);
}
