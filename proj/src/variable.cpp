#include "fuzzyhvac/variable.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "fuzzyhvac/errors.hpp"

namespace fuzzyhvac {

namespace {

void check_covered(const std::string& var, const std::vector<Term>& terms, double x) {
    for (const Term& t : terms) {
        if (membership(t.mf, x) > 0.0) {
            return;
        }
    }
    throw ConfigError("variable '" + var + "' leaves x=" + std::to_string(x) +
                      " uncovered (no term has membership > 0)");
}

} // namespace

LinguisticVariable::LinguisticVariable(std::string name, double lo, double hi,
                                       std::vector<Term> terms)
    : name_(std::move(name)), lo_(lo), hi_(hi), terms_(std::move(terms)) {
    if (!std::isfinite(lo_) || !std::isfinite(hi_) || lo_ >= hi_) {
        throw ConfigError("variable '" + name_ + "' has an invalid range");
    }
    if (terms_.empty()) {
        throw ConfigError("variable '" + name_ + "' declares no terms");
    }
    std::set<std::string> seen;
    for (const Term& t : terms_) {
        if (!seen.insert(t.name).second) {
            throw ConfigError("variable '" + name_ + "' declares duplicate term '" + t.name + "'");
        }
        const PiecewiseLinearMF& m = t.mf;
        if (!(m.a <= m.b && m.b <= m.c && m.c <= m.d)) {
            throw ConfigError("term '" + name_ + "." + t.name +
                              "' breakpoints must satisfy a <= b <= c <= d");
        }
        if (m.a < lo_ || m.d > hi_) {
            throw ConfigError("term '" + name_ + "." + t.name +
                              "' support lies outside the universe [" + std::to_string(lo_) +
                              "," + std::to_string(hi_) + "]");
        }
    }
    // Coverage sampled at 0.1 (or finer for narrow universes) plus every
    // interior breakpoint. The exact bounds are exempt: a set may rise from
    // zero right at the universe edge (a triangle over its full support),
    // which leaves two isolated points where only defuzzification's
    // no-rule-fired error can notice.
    const double step = std::min(0.1, (hi_ - lo_) / 100.0);
    const auto n = static_cast<long>(std::floor((hi_ - lo_) / step + 1e-9));
    for (long i = 1; i < n; ++i) {
        check_covered(name_, terms_, lo_ + static_cast<double>(i) * step);
    }
    for (const Term& t : terms_) {
        for (double x : {t.mf.a, t.mf.b, t.mf.c, t.mf.d}) {
            if (x > lo_ && x < hi_) {
                check_covered(name_, terms_, x);
            }
        }
    }
}

std::optional<std::size_t> LinguisticVariable::term_index(std::string_view term) const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].name == term) {
            return i;
        }
    }
    return std::nullopt;
}

const Term& LinguisticVariable::term(std::string_view name) const {
    if (auto i = term_index(name)) {
        return terms_[*i];
    }
    throw ConfigError("variable '" + name_ + "' has no term '" + std::string(name) + "'");
}

double LinguisticVariable::clamp(double x) const {
    return std::clamp(x, lo_, hi_);
}

double FuzzyValue::degree(std::string_view term) const {
    if (auto i = var_->term_index(term)) {
        return degrees_[*i];
    }
    throw ConfigError("variable '" + var_->name() + "' has no term '" + std::string(term) + "'");
}

bool FuzzyValue::any() const {
    return std::any_of(degrees_.begin(), degrees_.end(), [](double d) { return d > 0.0; });
}

std::size_t FuzzyValue::argmax() const {
    return static_cast<std::size_t>(
        std::max_element(degrees_.begin(), degrees_.end()) - degrees_.begin());
}

FuzzyValue fuzzify(const LinguisticVariable& var, double x, bool* clamped) {
    const double cx = var.clamp(x);
    if (clamped != nullptr) {
        *clamped = cx != x;
    }
    FuzzyValue fv(var);
    const auto& terms = var.terms();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        fv[i] = membership(terms[i].mf, cx);
    }
    return fv;
}

double defuzzify_centroid(const LinguisticVariable& var, const FuzzyValue& fv, double step) {
    if (!(step > 0.0)) {
        throw std::invalid_argument("defuzzify_centroid: step must be > 0");
    }
    if (&fv.variable() != &var && !(fv.variable() == var)) {
        throw ConfigError("defuzzify_centroid: fuzzy value belongs to variable '" +
                          fv.variable().name() + "', not '" + var.name() + "'");
    }
    if (!fv.any()) {
        throw NoRuleFired("no rule fired for variable '" + var.name() +
                          "': cannot defuzzify an all-zero fuzzy value");
    }
    const auto& terms = var.terms();
    const auto n = static_cast<long>(std::floor((var.hi() - var.lo()) / step + 1e-9));
    double num = 0.0;
    double den = 0.0;
    for (long i = 0; i <= n; ++i) {
        const double x = std::min(var.lo() + static_cast<double>(i) * step, var.hi());
        double mu = 0.0;
        for (std::size_t t = 0; t < terms.size(); ++t) {
            const double deg = fv[t];
            if (deg > 0.0) {
                mu = std::max(mu, std::min(deg, membership(terms[t].mf, x)));
            }
        }
        num += x * mu;
        den += mu;
    }
    return std::clamp(num / den, var.lo(), var.hi());
}

} // namespace fuzzyhvac
