#include "fuzzyhvac/registry.hpp"

#include <algorithm>
#include <set>

#include "fuzzyhvac/errors.hpp"

namespace fuzzyhvac {

RuleBase::RuleBase(std::string name, std::vector<std::string> input_variables,
                   std::string output_variable, std::vector<Rule> rules, bool complete)
    : name_(std::move(name)),
      input_variables_(std::move(input_variables)),
      output_variable_(std::move(output_variable)),
      rules_(std::move(rules)),
      complete_(complete) {
    if (input_variables_.empty()) {
        throw ConfigError("rulebase '" + name_ + "' declares no input variables");
    }
    std::set<std::string> seen(input_variables_.begin(), input_variables_.end());
    if (seen.size() != input_variables_.size()) {
        throw ConfigError("rulebase '" + name_ + "' lists an input variable twice");
    }
}

Registry::Registry(std::vector<LinguisticVariable> variables, std::vector<RuleBase> rulebases)
    : variables_(std::move(variables)), rulebases_(std::move(rulebases)) {
    if (variables_.empty()) {
        throw ConfigError("no variables declared");
    }
    {
        std::set<std::string> names;
        for (const auto& v : variables_) {
            if (!names.insert(v.name()).second) {
                throw ConfigError("duplicate variable '" + v.name() + "'");
            }
        }
    }
    std::set<std::string> rb_names;
    for (RuleBase& rb : rulebases_) {
        if (!rb_names.insert(rb.name()).second) {
            throw ConfigError("duplicate rulebase '" + rb.name() + "'");
        }
        std::vector<const LinguisticVariable*> inputs;
        for (const std::string& vn : rb.input_variables_) {
            const LinguisticVariable* v = find_variable(vn);
            if (v == nullptr) {
                throw ConfigError("rulebase '" + rb.name() + "' references unknown variable '" +
                                  vn + "'");
            }
            inputs.push_back(v);
        }
        const LinguisticVariable* out = find_variable(rb.output_variable_);
        if (out == nullptr) {
            throw ConfigError("rulebase '" + rb.name() + "' references unknown output variable '" +
                              rb.output_variable_ + "'");
        }

        rb.compiled_.clear();
        rb.compiled_.reserve(rb.rules_.size());
        std::set<std::vector<std::uint32_t>> combos;
        for (const Rule& r : rb.rules_) {
            if (r.antecedents.empty()) {
                throw ConfigError("rulebase '" + rb.name() + "' contains a rule with no antecedents");
            }
            RuleBase::CompiledRule cr;
            std::set<std::uint32_t> bound_slots;
            for (const auto& [vn, tn] : r.antecedents) {
                const auto slot_it =
                    std::find(rb.input_variables_.begin(), rb.input_variables_.end(), vn);
                if (slot_it == rb.input_variables_.end()) {
                    throw ConfigError("rulebase '" + rb.name() + "': variable '" + vn +
                                      "' is not one of its inputs");
                }
                const auto slot =
                    static_cast<std::uint32_t>(slot_it - rb.input_variables_.begin());
                if (!bound_slots.insert(slot).second) {
                    throw ConfigError("rulebase '" + rb.name() + "': rule binds variable '" + vn +
                                      "' twice");
                }
                const auto ti = inputs[slot]->term_index(tn);
                if (!ti) {
                    throw ConfigError("rulebase '" + rb.name() + "' references unknown term '" +
                                      tn + "' of variable '" + vn + "'");
                }
                cr.antecedents.emplace_back(slot, static_cast<std::uint32_t>(*ti));
            }
            if (r.consequent.first != rb.output_variable_) {
                throw ConfigError("rulebase '" + rb.name() + "': rule concludes on '" +
                                  r.consequent.first + "' instead of the declared output '" +
                                  rb.output_variable_ + "'");
            }
            const auto oti = out->term_index(r.consequent.second);
            if (!oti) {
                throw ConfigError("rulebase '" + rb.name() + "' references unknown term '" +
                                  r.consequent.second + "' of variable '" + rb.output_variable_ +
                                  "'");
            }
            cr.consequent_term = static_cast<std::uint32_t>(*oti);

            if (rb.complete_) {
                if (cr.antecedents.size() != rb.input_variables_.size()) {
                    throw ConfigError("rulebase '" + rb.name() +
                                      "' is declared complete but a rule leaves inputs unbound");
                }
                std::vector<std::uint32_t> combo(rb.input_variables_.size());
                for (const auto& [slot, term] : cr.antecedents) {
                    combo[slot] = term;
                }
                if (!combos.insert(combo).second) {
                    throw ConfigError("rulebase '" + rb.name() +
                                      "' has two rules for the same input combination");
                }
            }
            rb.compiled_.push_back(std::move(cr));
        }
        if (rb.complete_) {
            std::size_t expected = 1;
            for (const LinguisticVariable* v : inputs) {
                expected *= v->terms().size();
            }
            if (combos.size() != expected) {
                throw ConfigError("rulebase '" + rb.name() + "' is declared complete but covers " +
                                  std::to_string(combos.size()) + " of " +
                                  std::to_string(expected) + " input combinations");
            }
        }
    }
}

const LinguisticVariable* Registry::find_variable(std::string_view name) const {
    for (const auto& v : variables_) {
        if (v.name() == name) {
            return &v;
        }
    }
    return nullptr;
}

const LinguisticVariable& Registry::variable(std::string_view name) const {
    if (const auto* v = find_variable(name)) {
        return *v;
    }
    throw ConfigError("unknown variable '" + std::string(name) + "'");
}

const RuleBase* Registry::find_rulebase(std::string_view name) const {
    for (const auto& rb : rulebases_) {
        if (rb.name() == name) {
            return &rb;
        }
    }
    return nullptr;
}

const RuleBase& Registry::rulebase(std::string_view name) const {
    if (const auto* rb = find_rulebase(name)) {
        return *rb;
    }
    throw ConfigError("unknown rulebase '" + std::string(name) + "'");
}

FuzzyValue Registry::evaluate_rules(const RuleBase& rb, std::span<const FuzzyValue> inputs) const {
    if (inputs.size() != rb.input_variables_.size()) {
        throw ConfigError("rulebase '" + rb.name() + "' expects " +
                          std::to_string(rb.input_variables_.size()) + " inputs, got " +
                          std::to_string(inputs.size()));
    }
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (inputs[i].variable().name() != rb.input_variables_[i]) {
            throw ConfigError("rulebase '" + rb.name() + "' input " + std::to_string(i) +
                              " must be over variable '" + rb.input_variables_[i] + "', got '" +
                              inputs[i].variable().name() + "'");
        }
    }
    FuzzyValue out(variable(rb.output_variable_));
    for (const auto& cr : rb.compiled_) {
        double strength = 1.0;
        for (const auto& [slot, term] : cr.antecedents) {
            strength = std::min(strength, inputs[slot][term]);
            if (strength == 0.0) {
                break;
            }
        }
        if (strength > out[cr.consequent_term]) {
            out[cr.consequent_term] = strength;
        }
    }
    return out;
}

FuzzyValue Registry::evaluate_rules(const RuleBase& rb,
                                    const std::map<std::string, FuzzyValue>& inputs) const {
    std::vector<FuzzyValue> positional;
    positional.reserve(rb.input_variables_.size());
    for (const std::string& vn : rb.input_variables_) {
        const auto it = inputs.find(vn);
        if (it == inputs.end()) {
            throw ConfigError("rulebase '" + rb.name() + "' is missing an input for variable '" +
                              vn + "'");
        }
        positional.push_back(it->second);
    }
    return evaluate_rules(rb, positional);
}

} // namespace fuzzyhvac
