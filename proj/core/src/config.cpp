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

#include "folab/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "folab/errors.hpp"

namespace folab {

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) {
    return "";
  }
  std::size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

RunConfig RunConfig::parse(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') {
      continue;
    }
    std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected 'key = value'");
    }
    std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": empty key");
    }
    cfg.set(key, value);
  }
  return cfg;
}

RunConfig RunConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file: " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::string RunConfig::serialize() const {
  std::string out;
  for (const auto& [key, value] : entries_) {
    out += key;
    out += " = ";
    out += value;
    out += "\n";
  }
  return out;
}

bool RunConfig::has(const std::string& key) const {
  return find(key) != nullptr;
}

void RunConfig::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  entries_.emplace_back(key, value);
}

const std::string* RunConfig::find(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) {
      return &v;
    }
  }
  return nullptr;
}

std::string RunConfig::get_string(const std::string& key) const {
  const std::string* v = find(key);
  if (v == nullptr) {
    throw ConfigError("missing config key: " + key);
  }
  return *v;
}

std::string RunConfig::get_string(const std::string& key,
                                  const std::string& fallback) const {
  const std::string* v = find(key);
  return v == nullptr ? fallback : *v;
}

std::uint64_t RunConfig::get_u64(const std::string& key,
                                 std::uint64_t fallback) const {
  const std::string* v = find(key);
  if (v == nullptr) {
    return fallback;
  }
  try {
    return std::stoull(*v, nullptr, 0);
  } catch (const std::exception&) {
    throw ConfigError("config key " + key + ": expected an integer, got '" +
                      *v + "'");
  }
}

std::uint64_t RunConfig::require_u64(const std::string& key) const {
  if (!has(key)) {
    throw ConfigError("missing config key: " + key);
  }
  return get_u64(key, 0);
}

long double RunConfig::get_real(const std::string& key,
                                long double fallback) const {
  const std::string* v = find(key);
  if (v == nullptr) {
    return fallback;
  }
  char* end = nullptr;
  long double parsed = std::strtold(v->c_str(), &end);
  if (end == v->c_str() || *end != '\0') {
    throw ConfigError("config key " + key + ": expected a number, got '" + *v +
                      "'");
  }
  return parsed;
}

bool RunConfig::get_bool(const std::string& key, bool fallback) const {
  const std::string* v = find(key);
  if (v == nullptr) {
    return fallback;
  }
  if (*v == "true" || *v == "1" || *v == "yes") {
    return true;
  }
  if (*v == "false" || *v == "0" || *v == "no") {
    return false;
  }
  throw ConfigError("config key " + key + ": expected a boolean, got '" + *v +
                    "'");
}

std::vector<double> RunConfig::get_real_list(const std::string& key) const {
  std::vector<double> out;
  const std::string* v = find(key);
  if (v == nullptr) {
    return out;
  }
  std::stringstream ss(*v);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token = trim(token);
    if (token.empty()) {
      continue;
    }
    try {
      out.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw ConfigError("config key " + key + ": bad list element '" + token +
                        "'");
    }
  }
  return out;
}

std::optional<double> RunConfig::get_advantage(const std::string& key) const {
  const std::string* v = find(key);
  if (v == nullptr || *v == "unknown") {
    return std::nullopt;
  }
  try {
    double parsed = std::stod(*v);
    if (parsed < 0.0 || parsed > 1.0) {
      throw ConfigError("config key " + key + ": probability outside [0, 1]");
    }
    return parsed;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("config key " + key +
                      ": expected a probability or 'unknown'");
  }
}

}  // namespace folab
