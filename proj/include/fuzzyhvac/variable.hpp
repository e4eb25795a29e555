#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyhvac/mf.hpp"

namespace fuzzyhvac {

struct Term {
    std::string name;
    PiecewiseLinearMF mf;

    bool operator==(const Term&) const = default;
};

/// A named quantity over a closed numeric universe [lo,hi] with an ordered
/// list of named fuzzy sets. Construction validates the whole shape: term
/// names unique, every support inside the universe, and the universe fully
/// covered (max membership > 0 everywhere, sampled at 0.1 plus all
/// breakpoints). Immutable afterwards.
class LinguisticVariable {
public:
    LinguisticVariable(std::string name, double lo, double hi, std::vector<Term> terms);

    const std::string& name() const { return name_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    const std::vector<Term>& terms() const { return terms_; }

    std::optional<std::size_t> term_index(std::string_view term) const;
    const Term& term(std::string_view name) const; // throws ConfigError if unknown

    double clamp(double x) const;

    bool operator==(const LinguisticVariable&) const = default;

private:
    std::string name_;
    double lo_;
    double hi_;
    std::vector<Term> terms_;
};

/// Degrees of truth over one variable's terms, stored densely in term
/// order. Keeps a pointer into the owning registry's variable, so the
/// registry must outlive any FuzzyValue derived from it.
class FuzzyValue {
public:
    explicit FuzzyValue(const LinguisticVariable& var)
        : var_(&var), degrees_(var.terms().size(), 0.0) {}

    const LinguisticVariable& variable() const { return *var_; }

    double operator[](std::size_t i) const { return degrees_[i]; }
    double& operator[](std::size_t i) { return degrees_[i]; }
    std::size_t size() const { return degrees_.size(); }
    std::span<const double> degrees() const { return degrees_; }

    double degree(std::string_view term) const; // throws ConfigError if unknown

    /// True when at least one degree is positive.
    bool any() const;

    /// Index of the largest degree (first wins ties).
    std::size_t argmax() const;

private:
    const LinguisticVariable* var_;
    std::vector<double> degrees_;
};

/// Crisp value -> degrees over every term of var. Out-of-universe inputs
/// are clamped to the bounds; when that happens *clamped is set (live
/// sensor feeds produce outliers, rejecting them would stall the
/// controller).
FuzzyValue fuzzify(const LinguisticVariable& var, double x, bool* clamped = nullptr);

/// Centre-of-gravity defuzzification of the clipped-max aggregate
/// mu(x) = max_t min(fv[t], membership(t, x)), sampled on the grid
/// lo, lo+step, ..., hi. Throws NoRuleFired when every degree is zero.
double defuzzify_centroid(const LinguisticVariable& var, const FuzzyValue& fv, double step);

} // namespace fuzzyhvac
