#pragma once

#include <array>
#include <string>

#include "fuzzyhvac/hvac_state.hpp"
#include "fuzzyhvac/registry.hpp"

namespace fuzzyhvac {

struct ClimateInputs {
    double outdoor_temp = 0.0;     // degC
    double outdoor_humidity = 0.0; // % relative
    double indoor_temp = 0.0;      // degC
};

/// Stage-one result: the crisp perceived outdoor temperature plus the
/// pre-defuzzification degrees it was collapsed from.
struct ApparentTemperature {
    double crisp = 0.0;
    FuzzyValue degrees;
};

struct HvacCommand {
    HvacState state = HvacState::Off;
    double action_value = 0.0; // crisp position on the action universe
};

/// Which registry entries the pipeline is wired to. Defaults match the
/// bundled climate.rules file.
struct ControllerConfig {
    std::string humidity_var = "humidity";
    std::string outdoor_var = "outdoor";
    std::string indoor_var = "indoor";
    std::string action_var = "action";
    std::string apparent_rulebase = "apparent";
    std::string action_rulebase = "command";
    double centroid_step = 0.1;
};

/// Two-stage Mamdani pipeline: outdoor conditions -> crisp apparent
/// temperature -> heating/cooling command. Stateless once constructed;
/// safe to call concurrently as long as the registry outlives it.
class ClimateController {
public:
    explicit ClimateController(const Registry& registry, ControllerConfig config = {});

    /// Fuzzifies outdoor temperature and humidity, runs the apparent-
    /// temperature rule table and collapses the result by centroid.
    ApparentTemperature compute_apparent_temperature(double outdoor_temp, double humidity) const;

    /// Re-fuzzifies the crisp apparent temperature together with the indoor
    /// temperature, runs the action rule table and maps the centroid to a
    /// discrete command.
    HvacCommand decide_action(const ApparentTemperature& apparent, double indoor_temp) const;

    /// Action term with maximal membership at action_value. Ties prefer the
    /// cheaper command: Off > HeatNormal > CoolNormal > HeatMax > CoolMax.
    HvacState command_from_action(double action_value) const;

    /// Full pipeline for one sample.
    HvacCommand evaluate(const ClimateInputs& inputs) const;

    const Registry& registry() const { return *registry_; }
    const ControllerConfig& config() const { return config_; }

private:
    const Registry* registry_;
    ControllerConfig config_;
    const LinguisticVariable* humidity_;
    const LinguisticVariable* outdoor_;
    const LinguisticVariable* indoor_;
    const LinguisticVariable* action_;
    const RuleBase* rb_apparent_;
    const RuleBase* rb_action_;
    const LinguisticVariable* apparent_input_; // rb_action_ input that carries the apparent temp
    bool apparent_first_;                      // slot order of rb_action_'s inputs
    bool humidity_first_;                      // slot order of rb_apparent_'s inputs
    std::array<std::size_t, 5> action_terms_;  // term index per HvacState
};

} // namespace fuzzyhvac
