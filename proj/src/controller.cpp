#include "fuzzyhvac/controller.hpp"

#include <vector>

#include "fuzzyhvac/errors.hpp"

namespace fuzzyhvac {

std::string_view state_name(HvacState s) {
    switch (s) {
    case HvacState::HeatMax: return "heat_max";
    case HvacState::HeatNormal: return "heat_normal";
    case HvacState::Off: return "off";
    case HvacState::CoolNormal: return "cool_normal";
    case HvacState::CoolMax: return "cool_max";
    }
    return "off";
}

HvacState state_from_name(std::string_view name) {
    if (name == "heat_max") return HvacState::HeatMax;
    if (name == "heat_normal") return HvacState::HeatNormal;
    if (name == "off") return HvacState::Off;
    if (name == "cool_normal") return HvacState::CoolNormal;
    if (name == "cool_max") return HvacState::CoolMax;
    throw ConfigError("unknown HVAC state '" + std::string(name) + "'");
}

namespace {

// Term names the action variable must provide, indexed by HvacState.
constexpr std::array<std::string_view, 5> kActionTermNames = {
    "heat_max", "heat_normal", "no_system", "cool_normal", "cool_max"};

// Tie preference for command_from_action: least energetic command first.
constexpr std::array<HvacState, 5> kTiePreference = {
    HvacState::Off, HvacState::HeatNormal, HvacState::CoolNormal,
    HvacState::HeatMax, HvacState::CoolMax};

} // namespace

ClimateController::ClimateController(const Registry& registry, ControllerConfig config)
    : registry_(&registry), config_(std::move(config)) {
    humidity_ = &registry.variable(config_.humidity_var);
    outdoor_ = &registry.variable(config_.outdoor_var);
    indoor_ = &registry.variable(config_.indoor_var);
    action_ = &registry.variable(config_.action_var);
    rb_apparent_ = &registry.rulebase(config_.apparent_rulebase);
    rb_action_ = &registry.rulebase(config_.action_rulebase);

    if (rb_apparent_->input_variables().size() != 2) {
        throw ConfigError("rulebase '" + rb_apparent_->name() + "' must take exactly two inputs");
    }
    const auto& ap_in = rb_apparent_->input_variables();
    if (ap_in[0] == config_.humidity_var && ap_in[1] == config_.outdoor_var) {
        humidity_first_ = true;
    } else if (ap_in[0] == config_.outdoor_var && ap_in[1] == config_.humidity_var) {
        humidity_first_ = false;
    } else {
        throw ConfigError("rulebase '" + rb_apparent_->name() + "' must take '" +
                          config_.humidity_var + "' and '" + config_.outdoor_var + "' as inputs");
    }

    if (rb_action_->input_variables().size() != 2) {
        throw ConfigError("rulebase '" + rb_action_->name() + "' must take exactly two inputs");
    }
    const auto& ac_in = rb_action_->input_variables();
    if (ac_in[0] == config_.indoor_var) {
        apparent_first_ = false;
        apparent_input_ = &registry.variable(ac_in[1]);
    } else if (ac_in[1] == config_.indoor_var) {
        apparent_first_ = true;
        apparent_input_ = &registry.variable(ac_in[0]);
    } else {
        throw ConfigError("rulebase '" + rb_action_->name() + "' must take '" +
                          config_.indoor_var + "' as one of its inputs");
    }
    if (rb_action_->output_variable() != config_.action_var) {
        throw ConfigError("rulebase '" + rb_action_->name() + "' must output '" +
                          config_.action_var + "'");
    }

    for (std::size_t s = 0; s < kActionTermNames.size(); ++s) {
        const auto idx = action_->term_index(kActionTermNames[s]);
        if (!idx) {
            throw ConfigError("action variable '" + action_->name() + "' is missing term '" +
                              std::string(kActionTermNames[s]) + "'");
        }
        action_terms_[s] = *idx;
    }
    if (!(config_.centroid_step > 0.0)) {
        throw ConfigError("centroid step must be > 0");
    }
}

ApparentTemperature ClimateController::compute_apparent_temperature(double outdoor_temp,
                                                                    double humidity) const {
    FuzzyValue h = fuzzify(*humidity_, humidity);
    FuzzyValue t = fuzzify(*outdoor_, outdoor_temp);
    std::vector<FuzzyValue> inputs;
    inputs.reserve(2);
    if (humidity_first_) {
        inputs.push_back(std::move(h));
        inputs.push_back(std::move(t));
    } else {
        inputs.push_back(std::move(t));
        inputs.push_back(std::move(h));
    }
    FuzzyValue degrees = registry_->evaluate_rules(*rb_apparent_, inputs);
    const double crisp =
        defuzzify_centroid(registry_->variable(rb_apparent_->output_variable()), degrees,
                           config_.centroid_step);
    return ApparentTemperature{crisp, std::move(degrees)};
}

HvacCommand ClimateController::decide_action(const ApparentTemperature& apparent,
                                             double indoor_temp) const {
    FuzzyValue app = fuzzify(*apparent_input_, apparent.crisp);
    FuzzyValue ind = fuzzify(*indoor_, indoor_temp);
    std::vector<FuzzyValue> inputs;
    inputs.reserve(2);
    if (apparent_first_) {
        inputs.push_back(std::move(app));
        inputs.push_back(std::move(ind));
    } else {
        inputs.push_back(std::move(ind));
        inputs.push_back(std::move(app));
    }
    const FuzzyValue out = registry_->evaluate_rules(*rb_action_, inputs);
    const double action_value = defuzzify_centroid(*action_, out, config_.centroid_step);
    return HvacCommand{command_from_action(action_value), action_value};
}

HvacState ClimateController::command_from_action(double action_value) const {
    HvacState best = HvacState::Off;
    double best_degree = -1.0;
    for (HvacState s : kTiePreference) {
        const Term& term = action_->terms()[action_terms_[static_cast<std::size_t>(s)]];
        const double deg = membership(term.mf, action_value);
        if (deg > best_degree) {
            best_degree = deg;
            best = s;
        }
    }
    return best;
}

HvacCommand ClimateController::evaluate(const ClimateInputs& inputs) const {
    const ApparentTemperature apparent =
        compute_apparent_temperature(inputs.outdoor_temp, inputs.outdoor_humidity);
    return decide_action(apparent, inputs.indoor_temp);
}

} // namespace fuzzyhvac
