#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fuzzyhvac {

/// One "if x1 is t1 and x2 is t2 ... then y is t" rule, by name. Names are
/// resolved against the registry when the rule base is compiled.
struct Rule {
    std::vector<std::pair<std::string, std::string>> antecedents; // (variable, term)
    std::pair<std::string, std::string> consequent;

    bool operator==(const Rule&) const = default;
};

class Registry;

/// A named rule table over a fixed input/output variable signature. When
/// declared complete, validation requires exactly one rule per combination
/// of input terms.
class RuleBase {
public:
    RuleBase(std::string name,
             std::vector<std::string> input_variables,
             std::string output_variable,
             std::vector<Rule> rules,
             bool complete = false);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& input_variables() const { return input_variables_; }
    const std::string& output_variable() const { return output_variable_; }
    const std::vector<Rule>& rules() const { return rules_; }
    bool complete() const { return complete_; }

    bool operator==(const RuleBase& other) const {
        return name_ == other.name_ && input_variables_ == other.input_variables_ &&
               output_variable_ == other.output_variable_ && rules_ == other.rules_ &&
               complete_ == other.complete_;
    }

private:
    friend class Registry;

    struct CompiledRule {
        // (input slot, term index) pairs; consequent as term index in the output variable
        std::vector<std::pair<std::uint32_t, std::uint32_t>> antecedents;
        std::uint32_t consequent_term = 0;
    };

    std::string name_;
    std::vector<std::string> input_variables_;
    std::string output_variable_;
    std::vector<Rule> rules_;
    bool complete_;
    std::vector<CompiledRule> compiled_;
};

} // namespace fuzzyhvac
