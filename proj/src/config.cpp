#include "fuzzyhvac/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fuzzyhvac/errors.hpp"

namespace fuzzyhvac {

namespace {

struct Token {
    std::string text;
    int column; // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') {
            break;
        }
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#') {
            ++i;
        }
        out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    return out;
}

double parse_number(const Token& tok, int line) {
    const char* begin = tok.text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + tok.text.size() || tok.text.empty()) {
        throw ParseError("expected a number, got '" + tok.text + "'", line, tok.column);
    }
    return v;
}

// Variables are accumulated as raw parts so shoulder terms can be resolved
// against the declared range before LinguisticVariable validates them.
struct PendingTerm {
    std::string name;
    bool left_shoulder = false;
    bool right_shoulder = false;
    double a = 0, b = 0, c = 0, d = 0;
    int line = 0;
};

struct PendingVariable {
    std::string name;
    double lo = 0, hi = 0;
    std::vector<PendingTerm> terms;
};

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

} // namespace

Registry parse_config(std::string_view text) {
    std::vector<PendingVariable> pending_vars;
    std::vector<RuleBase> rulebases;

    // rulebase parts staged until its rules are all read
    struct PendingRuleBase {
        std::string name;
        std::vector<std::string> inputs;
        std::string output;
        bool complete = false;
        std::vector<Rule> rules;
    };
    std::vector<PendingRuleBase> pending_rbs;

    enum class Context { None, Variable, RuleBase };
    Context ctx = Context::None;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const std::vector<Token> toks = tokenize(line);
        if (toks.empty()) {
            continue;
        }
        const std::string& kw = toks[0].text;

        if (kw == "variable") {
            if (toks.size() != 5 || toks[2].text != "range") {
                throw ParseError("expected 'variable <name> range <lo> <hi>'", line_no,
                                 toks[0].column);
            }
            PendingVariable pv;
            pv.name = toks[1].text;
            pv.lo = parse_number(toks[3], line_no);
            pv.hi = parse_number(toks[4], line_no);
            pending_vars.push_back(std::move(pv));
            ctx = Context::Variable;
        } else if (kw == "term") {
            if (ctx != Context::Variable) {
                throw ParseError("'term' outside a variable block", line_no, toks[0].column);
            }
            if (toks.size() != 6) {
                throw ParseError("expected 'term <name> <a> <b> <c> <d>'", line_no,
                                 toks[0].column);
            }
            PendingTerm pt;
            pt.name = toks[1].text;
            pt.line = line_no;
            if (toks[2].text == "shoulder") {
                pt.left_shoulder = true;
            } else {
                pt.a = parse_number(toks[2], line_no);
            }
            pt.b = parse_number(toks[3], line_no);
            pt.c = parse_number(toks[4], line_no);
            if (toks[5].text == "shoulder") {
                pt.right_shoulder = true;
            } else {
                pt.d = parse_number(toks[5], line_no);
            }
            pending_vars.back().terms.push_back(pt);
        } else if (kw == "rulebase") {
            std::size_t i = 1;
            if (toks.size() < 6) {
                throw ParseError("expected 'rulebase <name> inputs <v...> output <v> [complete]'",
                                 line_no, toks[0].column);
            }
            PendingRuleBase prb;
            prb.name = toks[i++].text;
            if (toks[i].text != "inputs") {
                throw ParseError("expected 'inputs'", line_no, toks[i].column);
            }
            ++i;
            while (i < toks.size() && toks[i].text != "output") {
                prb.inputs.push_back(toks[i++].text);
            }
            if (i >= toks.size() || toks[i].text != "output") {
                throw ParseError("expected 'output <variable>'", line_no, toks.back().column);
            }
            ++i;
            if (i >= toks.size()) {
                throw ParseError("expected output variable name", line_no, toks.back().column);
            }
            prb.output = toks[i++].text;
            if (i < toks.size()) {
                if (toks[i].text != "complete" || i + 1 != toks.size()) {
                    throw ParseError("unexpected token '" + toks[i].text + "'", line_no,
                                     toks[i].column);
                }
                prb.complete = true;
            }
            pending_rbs.push_back(std::move(prb));
            ctx = Context::RuleBase;
        } else if (kw == "if") {
            if (ctx != Context::RuleBase) {
                throw ParseError("'if' outside a rulebase block", line_no, toks[0].column);
            }
            // if V is T (and V is T)* then V is T
            Rule rule;
            std::size_t i = 1;
            bool in_then = false;
            while (i < toks.size()) {
                if (i + 2 >= toks.size() || toks[i + 1].text != "is") {
                    throw ParseError("expected '<variable> is <term>'", line_no, toks[i].column);
                }
                std::pair<std::string, std::string> clause{toks[i].text, toks[i + 2].text};
                i += 3;
                if (in_then) {
                    rule.consequent = std::move(clause);
                    if (i != toks.size()) {
                        throw ParseError("unexpected tokens after the consequent", line_no,
                                         toks[i].column);
                    }
                    break;
                }
                rule.antecedents.push_back(std::move(clause));
                if (i >= toks.size()) {
                    throw ParseError("rule is missing 'then'", line_no, toks.back().column);
                }
                if (toks[i].text == "and") {
                    ++i;
                } else if (toks[i].text == "then") {
                    ++i;
                    in_then = true;
                } else {
                    throw ParseError("expected 'and' or 'then', got '" + toks[i].text + "'",
                                     line_no, toks[i].column);
                }
            }
            if (!in_then || rule.consequent.first.empty()) {
                throw ParseError("rule is missing its consequent", line_no, toks.back().column);
            }
            pending_rbs.back().rules.push_back(std::move(rule));
        } else {
            throw ParseError("unknown directive '" + kw + "'", line_no, toks[0].column);
        }
    }

    if (pending_vars.empty()) {
        throw ConfigError("no variables declared");
    }

    std::vector<LinguisticVariable> variables;
    variables.reserve(pending_vars.size());
    for (const PendingVariable& pv : pending_vars) {
        std::vector<Term> terms;
        terms.reserve(pv.terms.size());
        for (const PendingTerm& pt : pv.terms) {
            PiecewiseLinearMF mf{pt.a, pt.b, pt.c, pt.d};
            if (pt.left_shoulder) {
                mf.a = mf.b;
            }
            if (pt.right_shoulder) {
                mf.d = mf.c;
            }
            terms.push_back({pt.name, mf});
        }
        variables.emplace_back(pv.name, pv.lo, pv.hi, std::move(terms));
    }

    std::vector<RuleBase> bases;
    bases.reserve(pending_rbs.size());
    for (PendingRuleBase& prb : pending_rbs) {
        bases.emplace_back(std::move(prb.name), std::move(prb.inputs), std::move(prb.output),
                           std::move(prb.rules), prb.complete);
    }

    return Registry(std::move(variables), std::move(bases));
}

Registry parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const Registry& registry) {
    std::ostringstream out;
    for (const LinguisticVariable& v : registry.variables()) {
        out << "variable " << v.name() << " range " << format_number(v.lo()) << ' '
            << format_number(v.hi()) << '\n';
        for (const Term& t : v.terms()) {
            const PiecewiseLinearMF& m = t.mf;
            out << "  term " << t.name << ' ';
            if (m.a == m.b) {
                out << "shoulder";
            } else {
                out << format_number(m.a);
            }
            out << ' ' << format_number(m.b) << ' ' << format_number(m.c) << ' ';
            if (m.c == m.d) {
                out << "shoulder";
            } else {
                out << format_number(m.d);
            }
            out << '\n';
        }
        out << '\n';
    }
    for (const RuleBase& rb : registry.rulebases()) {
        out << "rulebase " << rb.name() << " inputs";
        for (const std::string& v : rb.input_variables()) {
            out << ' ' << v;
        }
        out << " output " << rb.output_variable();
        if (rb.complete()) {
            out << " complete";
        }
        out << '\n';
        for (const Rule& r : rb.rules()) {
            out << "  if";
            for (std::size_t i = 0; i < r.antecedents.size(); ++i) {
                if (i > 0) {
                    out << " and";
                }
                out << ' ' << r.antecedents[i].first << " is " << r.antecedents[i].second;
            }
            out << " then " << r.consequent.first << " is " << r.consequent.second << '\n';
        }
        out << '\n';
    }
    return out.str();
}

} // namespace fuzzyhvac
