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

#ifndef FOLAB_STATS_FAILURE_STATS_HPP_
#define FOLAB_STATS_FAILURE_STATS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "folab/pke.hpp"

namespace folab {

struct TailEstimate {
  double t = 0.0;
  double value = 0.0;
  double stderr_value = 0.0;
};

struct PerMessageEstimate {
  std::uint64_t message = 0;
  double mean = 0.0;
  double mean_stderr = 0.0;
  double variance = 0.0;       // bias-corrected for the finite key batch
  double variance_stderr = 0.0;
  double sigma = 0.0;
  double sigma_stderr = 0.0;
  std::vector<TailEstimate> tail;
};

/// Estimated failure statistics: the key-averaged failure rate, its
/// variance over encryption randomness, and the tail envelope, each
/// maximized over the probed messages, with standard errors.
struct FailureStats {
  double delta_ik = 0.0;
  double delta_stderr = 0.0;
  double sigma = 0.0;
  double sigma_stderr = 0.0;
  std::vector<TailEstimate> tail;  // pointwise max over probed messages
  std::uint64_t trials_per_message = 0;
  std::uint64_t keys_per_randomness = 0;
  std::uint64_t messages_probed = 0;
  std::uint64_t argmax_mean_message = 0;
  std::uint64_t argmax_sigma_message = 0;
  std::uint64_t seed = 0;
  std::vector<PerMessageEstimate> per_message;
};

struct EstimateOptions {
  std::uint64_t r_samples = 200;   // encryption-randomness draws per message
  std::uint64_t keys_per_r = 64;   // fresh key pairs per randomness draw
  std::vector<double> tail_grid;   // defaults to 0.05 .. 0.95 deciles
  // Messages to probe; default: the whole space when |M| <= 256,
  // otherwise a sampled subset of that size (disclosed in the report).
  std::optional<std::vector<std::uint64_t>> messages;
  unsigned threads = 0;
};

/// Estimates the failure statistics by the r-first decomposition: sample
/// encryption randomness, estimate the key-averaged failure probability
/// with a batch of fresh key pairs, then take mean and variance across the
/// randomness draws. Requires r_samples * keys_per_r >= 100.
FailureStats estimate_failure_stats(const PkeScheme& scheme,
                                    const EstimateOptions& options,
                                    std::uint64_t seed);

}  // namespace folab

#endif  // FOLAB_STATS_FAILURE_STATS_HPP_
