/*
 * Copyright 2026 The folab Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FOLAB_CONFIG_HPP_
#define FOLAB_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace folab {

/// One run's declarative key-value document. `key = value` lines, '#'
/// comments, insertion order preserved. parse(serialize(c)) == c.
class RunConfig {
 public:
  static RunConfig parse(const std::string& text);
  static RunConfig parse_file(const std::string& path);

  std::string serialize() const;

  bool has(const std::string& key) const;
  void set(const std::string& key, const std::string& value);

  std::string get_string(const std::string& key) const;  // throws if absent
  std::string get_string(const std::string& key,
                         const std::string& fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  std::uint64_t require_u64(const std::string& key) const;
  long double get_real(const std::string& key, long double fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<double> get_real_list(const std::string& key) const;
  /// A probability or the word "unknown".
  std::optional<double> get_advantage(const std::string& key) const;

  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }

  bool operator==(const RunConfig&) const = default;

 private:
  const std::string* find(const std::string& key) const;

  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace folab

#endif  // FOLAB_CONFIG_HPP_
