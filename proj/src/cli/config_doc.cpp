#include "elastics/cli/config_doc.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace elastics::cli {

namespace {

std::string format_error(const std::string& origin, int line,
                         const std::string& field, const std::string& message) {
  std::string out = origin;
  if (line > 0) out += ":" + std::to_string(line);
  out += ": ";
  if (!field.empty()) out += field + ": ";
  return out + message;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += '.';
    out += p;
  }
  return out;
}

bool bare_key_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

class TomlParser {
 public:
  TomlParser(std::string_view text, std::string origin) : text_(text) {
    doc_.origin = std::move(origin);
  }

  ConfigDoc run() {
    while (pos_ < text_.size()) {
      skip_blank();
      if (at_end_of_line()) {
        next_line();
        continue;
      }
      std::string entry;
      if (peek() == '[') {
        header();
        entry = join(current_);
      } else {
        entry = key_value();
      }
      skip_blank();
      if (!at_end_of_line()) fail("unexpected text after the value", entry);
      next_line();
    }
    return std::move(doc_);
  }

 private:
  [[noreturn]] void fail(const std::string& message, const std::string& field = {}) const {
    throw ConfigError(doc_.origin, line_, field, message);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool eof() const { return pos_ >= text_.size(); }

  void skip_blank() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }

  // blank, comment or newline ahead
  bool at_end_of_line() const {
    return eof() || peek() == '\n' || peek() == '#' || peek() == '\r';
  }

  void next_line() {
    while (!eof() && peek() != '\n') ++pos_;
    if (!eof()) {
      ++pos_;
      ++line_;
    }
  }

  // whitespace, comments and newlines inside arrays
  void skip_space_multiline() {
    for (;;) {
      skip_blank();
      if (eof()) return;
      if (peek() == '#') {
        while (!eof() && peek() != '\n') ++pos_;
      } else if (peek() == '\r') {
        ++pos_;
      } else if (peek() == '\n') {
        ++pos_;
        ++line_;
      } else {
        return;
      }
    }
  }

  std::vector<std::string> key_path() {
    std::vector<std::string> parts;
    for (;;) {
      skip_blank();
      if (peek() == '"' || peek() == '\'') {
        parts.push_back(string_value());
      } else {
        const std::size_t start = pos_;
        while (!eof() && bare_key_char(peek())) ++pos_;
        if (pos_ == start) fail("expected a key");
        parts.emplace_back(text_.substr(start, pos_ - start));
      }
      skip_blank();
      if (peek() != '.') return parts;
      ++pos_;
    }
  }

  json& table_at(const std::vector<std::string>& path, bool define) {
    json* node = &doc_.data;
    std::vector<std::string> so_far;
    for (const auto& key : path) {
      so_far.push_back(key);
      json& child = (*node)[key];
      if (child.is_null()) child = json::object();
      if (!child.is_object()) fail("key is already a value, not a table", join(so_far));
      node = &child;
    }
    if (define) {
      const std::string name = join(path);
      if (defined_tables_.count(name)) fail("table defined twice", name);
      defined_tables_.insert({name, line_});
      doc_.lines.emplace(name, line_);
    }
    return *node;
  }

  void header() {
    ++pos_;
    if (peek() == '[') fail("arrays of tables are not supported");
    current_ = key_path();
    skip_blank();
    if (peek() != ']') fail("expected ']' to close the table header");
    ++pos_;
    table_at(current_, true);
  }

  std::string key_value() {
    std::vector<std::string> key = key_path();
    skip_blank();
    if (peek() != '=') fail("expected '=' after key", join(key));
    ++pos_;
    skip_blank();
    std::vector<std::string> full = current_;
    full.insert(full.end(), key.begin(), key.end());
    const std::string name = join(full);
    const int line = line_;
    json v = value(name);
    std::vector<std::string> parent(full.begin(), full.end() - 1);
    json& table = table_at(parent, false);
    if (table.contains(full.back())) fail("duplicate key", name);
    table[full.back()] = std::move(v);
    doc_.lines[name] = line;
    return name;
  }

  std::string string_value() {
    const char quote = peek();
    ++pos_;
    std::string out;
    for (;;) {
      if (eof() || peek() == '\n') fail("unterminated string");
      const char c = text_[pos_++];
      if (c == quote) return out;
      if (c == '\\' && quote == '"') {
        if (eof()) fail("unterminated string");
        const char e = text_[pos_++];
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case 'r': out += '\r'; break;
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          default: fail(std::string("unsupported escape '\\") + e + "'");
        }
      } else {
        out += c;
      }
    }
  }

  json value(const std::string& name) {
    const char c = peek();
    if (c == '"' || c == '\'') return string_value();
    if (c == '[') return array(name);
    if (c == '{') fail("inline tables are not supported; use a [table] header", name);
    const std::size_t start = pos_;
    while (!eof() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != ',' &&
           peek() != ']' && peek() != '#')
      ++pos_;
    const std::string tok(text_.substr(start, pos_ - start));
    if (tok.empty()) fail("missing value", name);
    if (tok == "true") return true;
    if (tok == "false") return false;
    return number(tok, name);
  }

  json number(std::string tok, const std::string& name) {
    tok.erase(std::remove(tok.begin(), tok.end(), '_'), tok.end());
    std::string body = tok;
    double sign = 1.0;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
      if (body[0] == '-') sign = -1.0;
      body.erase(0, 1);
    }
    if (body == "inf") return sign * std::numeric_limits<double>::infinity();
    if (body == "nan") return std::numeric_limits<double>::quiet_NaN();
    const bool is_float = body.find_first_of(".eE") != std::string::npos;
    const char* first = tok.data() + (tok[0] == '+' ? 1 : 0);
    const char* last = tok.data() + tok.size();
    if (!is_float) {
      std::int64_t iv = 0;
      auto [p, ec] = std::from_chars(first, last, iv);
      if (ec == std::errc() && p == last) return iv;
    } else {
      double dv = 0.0;
      auto [p, ec] = std::from_chars(first, last, dv);
      if (ec == std::errc() && p == last) return dv;
    }
    fail("not a number, string, boolean or array: '" + tok + "'", name);
  }

  json array(const std::string& name) {
    ++pos_;
    json out = json::array();
    for (;;) {
      skip_space_multiline();
      if (eof()) fail("unterminated array", name);
      if (peek() == ']') {
        ++pos_;
        return out;
      }
      out.push_back(value(name));
      skip_space_multiline();
      if (peek() == ',') {
        ++pos_;
      } else if (peek() != ']') {
        fail("expected ',' or ']' in array", name);
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  ConfigDoc doc_;
  std::vector<std::string> current_;
  std::map<std::string, int> defined_tables_;
};

void index_lines(const json& node, const std::string& prefix, ConfigDoc& doc) {
  if (!node.is_object()) return;
  for (auto it = node.begin(); it != node.end(); ++it) {
    const std::string path = prefix.empty() ? it.key() : prefix + "." + it.key();
    doc.lines.emplace(path, 0);
    index_lines(it.value(), path, doc);
  }
}

}  // namespace

ConfigError::ConfigError(const std::string& origin, int line, std::string field,
                         const std::string& message)
    : Error(format_error(origin, line, field, message)), line_(line), field_(std::move(field)) {}

int ConfigDoc::line_of(const std::string& path) const {
  // fall back to the closest enclosing table
  std::string p = path;
  for (;;) {
    auto it = lines.find(p);
    if (it != lines.end() && it->second > 0) return it->second;
    const auto dot = p.rfind('.');
    if (dot == std::string::npos) return 0;
    p.erase(dot);
  }
}

ConfigDoc parse_toml(std::string_view text, std::string origin) {
  return TomlParser(text, std::move(origin)).run();
}

ConfigDoc parse_json(std::string_view text, std::string origin) {
  ConfigDoc doc;
  doc.origin = std::move(origin);
  try {
    doc.data = json::parse(text, nullptr, true, true);
  } catch (const json::parse_error& err) {
    const std::size_t at = std::min<std::size_t>(err.byte, text.size());
    const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + at, '\n'));
    throw ConfigError(doc.origin, line, {}, std::string("invalid JSON: ") + err.what());
  }
  if (!doc.data.is_object()) throw ConfigError(doc.origin, 1, {}, "top level must be an object");
  index_lines(doc.data, "", doc);
  return doc;
}

ConfigDoc load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string(), 0, {}, "cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (path.extension() == ".json") return parse_json(text, path.string());
  return parse_toml(text, path.string());
}

}  // namespace elastics::cli
