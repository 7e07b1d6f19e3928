#include "litichain/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace litichain {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string strip_comment(const std::string& line) {
  bool in_str = false;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_str = !in_str;
    if (line[i] == '#' && !in_str) return line.substr(0, i);
  }
  return line;
}

ConfigValue parse_scalar(const std::string& raw, size_t lineno) {
  ConfigValue v;
  if (raw.size() >= 2 && raw.front() == '"' && raw.back() == '"') {
    v.kind = ConfigValue::Kind::String;
    v.str = raw.substr(1, raw.size() - 2);
    return v;
  }
  if (raw == "true" || raw == "false") {
    v.kind = ConfigValue::Kind::Bool;
    v.boolean = raw == "true";
    return v;
  }
  try {
    size_t used = 0;
    v.num = std::stod(raw, &used);
    if (used != raw.size()) throw std::invalid_argument(raw);
    v.kind = ConfigValue::Kind::Number;
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("line " + std::to_string(lineno) + ": bad value '" + raw + "'");
  }
}

}  // namespace

ConfigDoc ConfigDoc::parse(const std::string& text) {
  ConfigDoc doc;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string raw = trim(line.substr(eq + 1));
    if (key.empty() || raw.empty()) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": empty key or value");
    }
    ConfigValue value;
    if (raw.front() == '[') {
      if (raw.back() != ']') {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": unterminated array");
      }
      std::string body = raw.substr(1, raw.size() - 2);
      std::vector<std::string> items;
      std::string cur;
      bool in_str = false;
      for (char c : body) {
        if (c == '"') in_str = !in_str;
        if (c == ',' && !in_str) {
          items.push_back(trim(cur));
          cur.clear();
        } else {
          cur += c;
        }
      }
      if (!trim(cur).empty()) items.push_back(trim(cur));
      bool strings = !items.empty() && items.front().size() && items.front().front() == '"';
      value.kind = strings ? ConfigValue::Kind::StringList : ConfigValue::Kind::NumberList;
      for (const std::string& item : items) {
        ConfigValue s = parse_scalar(item, lineno);
        if (strings) {
          if (s.kind != ConfigValue::Kind::String) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": mixed array");
          }
          value.strings.push_back(s.str);
        } else {
          if (s.kind != ConfigValue::Kind::Number) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": mixed array");
          }
          value.numbers.push_back(s.num);
        }
      }
    } else {
      value = parse_scalar(raw, lineno);
    }
    doc.values_[key] = std::move(value);
  }
  return doc;
}

ConfigDoc ConfigDoc::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const ConfigValue& ConfigDoc::at(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw std::out_of_range("missing config key: " + key);
  return it->second;
}

std::string ConfigDoc::get_string(const std::string& key) const {
  const ConfigValue& v = at(key);
  if (v.kind != ConfigValue::Kind::String) throw std::invalid_argument(key + ": expected string");
  return v.str;
}

double ConfigDoc::get_number(const std::string& key) const {
  const ConfigValue& v = at(key);
  if (v.kind != ConfigValue::Kind::Number) throw std::invalid_argument(key + ": expected number");
  return v.num;
}

std::int64_t ConfigDoc::get_int(const std::string& key) const {
  double d = get_number(key);
  if (d != std::floor(d)) throw std::invalid_argument(key + ": expected integer");
  return static_cast<std::int64_t>(d);
}

bool ConfigDoc::get_bool(const std::string& key) const {
  const ConfigValue& v = at(key);
  if (v.kind != ConfigValue::Kind::Bool) throw std::invalid_argument(key + ": expected bool");
  return v.boolean;
}

std::vector<double> ConfigDoc::get_numbers(const std::string& key) const {
  const ConfigValue& v = at(key);
  if (v.kind != ConfigValue::Kind::NumberList) {
    throw std::invalid_argument(key + ": expected number array");
  }
  return v.numbers;
}

std::vector<std::int64_t> ConfigDoc::get_ints(const std::string& key) const {
  std::vector<std::int64_t> out;
  for (double d : get_numbers(key)) {
    if (d != std::floor(d)) throw std::invalid_argument(key + ": expected integer array");
    out.push_back(static_cast<std::int64_t>(d));
  }
  return out;
}

std::vector<std::string> ConfigDoc::get_strings(const std::string& key) const {
  const ConfigValue& v = at(key);
  if (v.kind != ConfigValue::Kind::StringList) {
    throw std::invalid_argument(key + ": expected string array");
  }
  return v.strings;
}

}  // namespace litichain
