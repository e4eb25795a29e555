#pragma once

#include <stdexcept>
#include <string>

namespace fuzzyhvac {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad registry state: unknown names, universe violations, duplicate or
/// missing declarations, incomplete rule tables.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Syntax or validation failure while reading a configuration file.
class ParseError : public ConfigError {
public:
    ParseError(const std::string& msg, int line, int column)
        : ConfigError("line " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Defuzzification was asked to collapse an all-zero fuzzy value. The two
/// bundled rule tables are complete, so hitting this means a broken config.
class NoRuleFired : public Error {
public:
    using Error::Error;
};

/// Malformed input data (CSV rows, mismatched report timelines).
class DataError : public Error {
public:
    using Error::Error;
};

/// Feed transport or payload problems (HTTP failures, bad JSON shapes).
class FeedError : public Error {
public:
    using Error::Error;
};

} // namespace fuzzyhvac
