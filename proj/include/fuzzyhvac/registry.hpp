#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyhvac/rules.hpp"
#include "fuzzyhvac/variable.hpp"

namespace fuzzyhvac {

/// The validated set of linguistic variables and rule bases an engine runs
/// against. Construction resolves every name, compiles rules to indices and
/// checks completeness; afterwards the registry is immutable, so lookups
/// and evaluation are safe from any number of threads.
class Registry {
public:
    Registry(std::vector<LinguisticVariable> variables, std::vector<RuleBase> rulebases);

    const std::vector<LinguisticVariable>& variables() const { return variables_; }
    const std::vector<RuleBase>& rulebases() const { return rulebases_; }

    const LinguisticVariable* find_variable(std::string_view name) const;
    const LinguisticVariable& variable(std::string_view name) const; // throws ConfigError
    const RuleBase* find_rulebase(std::string_view name) const;
    const RuleBase& rulebase(std::string_view name) const; // throws ConfigError

    bool operator==(const Registry& other) const {
        return variables_ == other.variables_ && rulebases_ == other.rulebases_;
    }

    /// Min/max rule evaluation: each rule fires at the minimum of its
    /// antecedent degrees, each output term aggregates the maximum firing
    /// strength of the rules concluding it. Inputs are positional, matching
    /// rb.input_variables().
    FuzzyValue evaluate_rules(const RuleBase& rb, std::span<const FuzzyValue> inputs) const;

    /// Name-keyed convenience form; throws ConfigError when an input
    /// variable of rb has no entry.
    FuzzyValue evaluate_rules(const RuleBase& rb,
                              const std::map<std::string, FuzzyValue>& inputs) const;

private:
    std::vector<LinguisticVariable> variables_;
    std::vector<RuleBase> rulebases_;
};

} // namespace fuzzyhvac
