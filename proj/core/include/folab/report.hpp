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

#ifndef FOLAB_REPORT_HPP_
#define FOLAB_REPORT_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "folab/bounds/bound_calc.hpp"
#include "folab/games/ensemble.hpp"
#include "folab/stats/failure_stats.hpp"

namespace folab {

inline constexpr int kReportSchemaVersion = 1;

/// Deterministic serialization: identical inputs give byte-identical
/// output (ordered keys, shortest-round-trip numbers, no timestamps).
using Json = nlohmann::ordered_json;

Json report_json(const FailureStats& stats);
Json report_json(const BoundReport& report);
Json report_json(const EnsembleResult& result);

std::string bound_report_csv(const BoundReport& report);
std::string failure_stats_csv(const FailureStats& stats);

}  // namespace folab

#endif  // FOLAB_REPORT_HPP_
