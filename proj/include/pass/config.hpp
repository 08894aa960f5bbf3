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

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace pass {

/**
 * Flat `key = value` configuration text with dotted section names, `#`
 * comments and comma-separated lists. Typed getters record which keys were
 * consumed so callers can reject typos via unused_keys().
 */
class KeyValueConfig {
  public:
    static KeyValueConfig parse_file(const std::string &path);
    static KeyValueConfig parse_string(const std::string &text);

    bool has(const std::string &key) const;

    std::string get_string(const std::string &key) const;
    std::string get_string(const std::string &key, const std::string &fallback) const;
    double get_double(const std::string &key) const;
    double get_double(const std::string &key, double fallback) const;
    int get_int(const std::string &key) const;
    int get_int(const std::string &key, int fallback) const;
    std::uint64_t get_u64(const std::string &key) const;
    std::uint64_t get_u64(const std::string &key, std::uint64_t fallback) const;
    bool get_bool(const std::string &key, bool fallback) const;
    std::vector<double> get_double_list(const std::string &key) const;
    std::vector<std::string> get_string_list(const std::string &key,
                                             const std::vector<std::string> &fallback) const;

    /// Keys present in the file that no getter ever touched.
    std::vector<std::string> unused_keys() const;

  private:
    std::string fetch(const std::string &key) const;
    std::map<std::string, std::string> values_;
    mutable std::set<std::string> touched_;
};

} // namespace pass
