#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cochain {

// Minimal TOML subset for scenario files: top-level tables, bare or quoted
// keys, strings, integers (decimal or 0x hex), booleans, single- or
// multi-line arrays, and inline tables. Parse failures raise Error with code
// "parse_error" and a line:column position.
struct TomlValue {
    enum class Kind { String, Integer, Boolean, Array, Table };

    Kind kind = Kind::Table;
    std::string str;
    std::int64_t integer = 0;
    bool boolean = false;
    std::vector<TomlValue> array;
    std::map<std::string, TomlValue> table;
    int line = 0;
    int column = 0;

    bool has(const std::string& key) const { return table.count(key) > 0; }
    const TomlValue& at(const std::string& key) const; // fails with parse_error
    const std::string& as_string() const;
    std::int64_t as_integer() const;
    bool as_boolean() const;
    const std::vector<TomlValue>& as_array() const;
    std::vector<std::string> string_array() const;
};

TomlValue parse_toml(const std::string& text);

} // namespace cochain
