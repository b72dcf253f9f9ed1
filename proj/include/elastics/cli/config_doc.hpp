#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "elastics/errors.hpp"

// Run configs: a TOML subset or JSON, both loaded into one json tree with a
// record of which source line set each dotted key.

namespace elastics::cli {

using nlohmann::json;

class ConfigError : public Error {
 public:
  ConfigError(const std::string& origin, int line, std::string field,
              const std::string& message);
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

struct ConfigDoc {
  json data = json::object();
  std::map<std::string, int> lines;  // "material.lambda" -> 7
  std::string origin = "<config>";

  int line_of(const std::string& path) const;
};

/// TOML subset: [table] and [a.b] headers, bare/quoted/dotted keys, basic
/// and literal strings, integers, floats (inf, nan), booleans, arrays
/// (may span lines), # comments. No inline tables, dates or array tables.
ConfigDoc parse_toml(std::string_view text, std::string origin = "<config>");

/// JSON with // comments allowed; line numbers come from the parser only.
ConfigDoc parse_json(std::string_view text, std::string origin = "<config>");

/// .json goes to parse_json, anything else to parse_toml.
ConfigDoc load_config(const std::filesystem::path& path);

}  // namespace elastics::cli
