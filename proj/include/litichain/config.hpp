#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace litichain {

/// Value in a flat key = value configuration document. Supported forms:
/// strings in double quotes, integers, floats, true/false, and flat arrays
/// of numbers or strings. '#' starts a comment.
struct ConfigValue {
  enum class Kind { String, Number, Bool, NumberList, StringList };
  Kind kind = Kind::Number;
  std::string str;
  double num = 0.0;
  bool boolean = false;
  std::vector<double> numbers;
  std::vector<std::string> strings;
};

class ConfigDoc {
 public:
  static ConfigDoc parse(const std::string& text);
  static ConfigDoc load(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::string get_string(const std::string& key) const;
  double get_number(const std::string& key) const;
  std::int64_t get_int(const std::string& key) const;
  bool get_bool(const std::string& key) const;
  std::vector<double> get_numbers(const std::string& key) const;
  std::vector<std::int64_t> get_ints(const std::string& key) const;
  std::vector<std::string> get_strings(const std::string& key) const;

  const std::map<std::string, ConfigValue>& values() const { return values_; }

 private:
  const ConfigValue& at(const std::string& key) const;
  std::map<std::string, ConfigValue> values_;
};

}  // namespace litichain
