// SPDX-License-Identifier: Apache-2.0
//
// pass-secure: secure beamforming for pinching-antenna systems
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "pass/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pass {

namespace {

std::string trim(const std::string &s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string &value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

double parse_double(const std::string &key, const std::string &value) {
    char *end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0')
        throw std::invalid_argument("config: key '" + key + "' is not a number: " + value);
    return v;
}

} // namespace

KeyValueConfig KeyValueConfig::parse_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("config: cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_string(buffer.str());
}

KeyValueConfig KeyValueConfig::parse_string(const std::string &text) {
    KeyValueConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                        " has no '='");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument("config: empty key on line " + std::to_string(line_no));
        if (cfg.values_.count(key))
            throw std::invalid_argument("config: duplicate key '" + key + "'");
        cfg.values_[key] = value;
    }
    return cfg;
}

bool KeyValueConfig::has(const std::string &key) const { return values_.count(key) > 0; }

std::string KeyValueConfig::fetch(const std::string &key) const {
    const auto it = values_.find(key);
    if (it == values_.end())
        throw std::invalid_argument("config: missing required key '" + key + "'");
    touched_.insert(key);
    return it->second;
}

std::string KeyValueConfig::get_string(const std::string &key) const { return fetch(key); }

std::string KeyValueConfig::get_string(const std::string &key,
                                       const std::string &fallback) const {
    if (!has(key))
        return fallback;
    return fetch(key);
}

double KeyValueConfig::get_double(const std::string &key) const {
    return parse_double(key, fetch(key));
}

double KeyValueConfig::get_double(const std::string &key, double fallback) const {
    if (!has(key))
        return fallback;
    return get_double(key);
}

int KeyValueConfig::get_int(const std::string &key) const {
    const double v = get_double(key);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw std::invalid_argument("config: key '" + key + "' must be an integer");
    return i;
}

int KeyValueConfig::get_int(const std::string &key, int fallback) const {
    if (!has(key))
        return fallback;
    return get_int(key);
}

std::uint64_t KeyValueConfig::get_u64(const std::string &key) const {
    const std::string value = fetch(key);
    char *end = nullptr;
    const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
    // strtoull silently wraps negative input
    if (end == value.c_str() || *end != '\0' || value.find('-') != std::string::npos)
        throw std::invalid_argument("config: key '" + key + "' is not an unsigned integer");
    return static_cast<std::uint64_t>(v);
}

std::uint64_t KeyValueConfig::get_u64(const std::string &key, std::uint64_t fallback) const {
    if (!has(key))
        return fallback;
    return get_u64(key);
}

bool KeyValueConfig::get_bool(const std::string &key, bool fallback) const {
    if (!has(key))
        return fallback;
    const std::string v = fetch(key);
    if (v == "true" || v == "1" || v == "yes")
        return true;
    if (v == "false" || v == "0" || v == "no")
        return false;
    throw std::invalid_argument("config: key '" + key + "' is not a boolean");
}

std::vector<double> KeyValueConfig::get_double_list(const std::string &key) const {
    const auto items = split_list(fetch(key));
    if (items.empty())
        throw std::invalid_argument("config: key '" + key + "' is an empty list");
    std::vector<double> out;
    out.reserve(items.size());
    for (const auto &item : items)
        out.push_back(parse_double(key, item));
    return out;
}

std::vector<std::string>
KeyValueConfig::get_string_list(const std::string &key,
                                const std::vector<std::string> &fallback) const {
    if (!has(key))
        return fallback;
    return split_list(fetch(key));
}

std::vector<std::string> KeyValueConfig::unused_keys() const {
    std::vector<std::string> out;
    for (const auto &[key, value] : values_)
        if (!touched_.count(key))
            out.push_back(key);
    return out;
}

} // namespace pass
