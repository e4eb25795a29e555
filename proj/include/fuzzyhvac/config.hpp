#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fuzzyhvac/registry.hpp"

namespace fuzzyhvac {

/// Parses the line-oriented rules format into a validated registry.
///
///   # comment
///   variable <name> range <lo> <hi>
///     term <name> <a> <b> <c> <d>          (`shoulder` allowed for a or d)
///   rulebase <name> inputs <v1> [<v2> ...] output <v> [complete]
///     if <v1> is <t1> [and <v2> is <t2> ...] then <v> is <t>
///
/// Indentation is free-form; term lines attach to the last variable and if
/// lines to the last rulebase. Throws ParseError with line/column for
/// syntax problems and ConfigError for semantic ones.
Registry parse_config(std::string_view text);

Registry parse_config_file(const std::filesystem::path& path);

/// Inverse of parse_config up to whitespace: parse(serialize(r)) == r.
std::string serialize_config(const Registry& registry);

} // namespace fuzzyhvac
