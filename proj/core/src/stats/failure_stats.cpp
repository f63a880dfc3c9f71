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

#include "folab/stats/failure_stats.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

#include "folab/errors.hpp"
#include "folab/games/ensemble.hpp"

namespace folab {

namespace {

std::vector<double> default_tail_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 19; ++i) {
    grid.push_back(0.05 * i);
  }
  return grid;
}

PerMessageEstimate estimate_one_message(const PkeScheme& scheme,
                                        std::uint64_t message_index,
                                        const EstimateOptions& options,
                                        const std::vector<double>& grid,
                                        std::uint64_t seed) {
  const std::uint64_t j_count = options.r_samples;
  const std::uint64_t k_count = options.keys_per_r;
  Rng rng(seed);
  Bytes m = scheme.message_space().element(message_index);

  std::vector<double> p_hat(j_count);
  for (std::uint64_t j = 0; j < j_count; ++j) {
    Bytes r = scheme.randomness_space().sample(rng);
    std::uint64_t fails = 0;
    for (std::uint64_t k = 0; k < k_count; ++k) {
      KeyPair kp = scheme.keygen(rng);
      Bytes c = scheme.encrypt(kp.pk, m, r);
      std::optional<Bytes> back = scheme.decrypt(kp.sk, c);
      if (!back || *back != m) {
        ++fails;
      }
    }
    p_hat[j] = static_cast<double>(fails) / static_cast<double>(k_count);
  }

  PerMessageEstimate est;
  est.message = message_index;

  const double jn = static_cast<double>(j_count);
  double sum = 0.0;
  for (double p : p_hat) {
    sum += p;
  }
  est.mean = sum / jn;

  double ss = 0.0;       // sum of squared deviations
  double m4 = 0.0;       // central fourth moment accumulator
  double bin_corr = 0.0; // within-batch binomial noise
  for (double p : p_hat) {
    const double d = p - est.mean;
    ss += d * d;
    m4 += d * d * d * d;
    if (k_count > 1) {
      bin_corr += p * (1.0 - p) / static_cast<double>(k_count - 1);
    }
  }
  const double s2 = j_count > 1 ? ss / (jn - 1.0) : 0.0;
  m4 /= jn;
  est.mean_stderr = j_count > 1 ? std::sqrt(s2 / jn) : 0.0;

  // s^2 estimates V_r[p] plus the mean within-batch binomial noise;
  // subtract an unbiased estimate of the latter.
  est.variance = std::max(0.0, s2 - bin_corr / jn);
  est.variance_stderr =
      j_count > 1 ? std::sqrt(std::max(0.0, m4 - s2 * s2) / jn) : 0.0;
  est.sigma = std::sqrt(est.variance);
  est.sigma_stderr = est.sigma > 0.0
                         ? est.variance_stderr / (2.0 * est.sigma)
                         : std::sqrt(est.variance_stderr);

  est.tail.reserve(grid.size());
  for (double t : grid) {
    std::uint64_t above = 0;
    for (double p : p_hat) {
      if (p >= t) {
        ++above;
      }
    }
    TailEstimate te;
    te.t = t;
    te.value = static_cast<double>(above) / jn;
    te.stderr_value = proportion_stderr(above, j_count);
    est.tail.push_back(te);
  }
  return est;
}

}  // namespace

FailureStats estimate_failure_stats(const PkeScheme& scheme,
                                    const EstimateOptions& options,
                                    std::uint64_t seed) {
  if (options.r_samples < 2 || options.keys_per_r < 1 ||
      options.r_samples * options.keys_per_r < 100) {
    throw DomainError(
        "estimate_failure_stats: need r_samples >= 2 and at least 100 "
        "trials per message");
  }

  std::vector<std::uint64_t> probe;
  if (options.messages) {
    probe = *options.messages;
    for (std::uint64_t m : probe) {
      if (!scheme.message_space().enumerable() ||
          m >= scheme.message_space().size()) {
        throw DomainError("estimate_failure_stats: message out of range");
      }
    }
  } else {
    if (!scheme.message_space().enumerable()) {
      throw DomainError(
          "estimate_failure_stats: message space is not enumerable; "
          "supply an explicit message sample");
    }
    const std::uint64_t total = scheme.message_space().size();
    if (total <= 256) {
      probe.resize(total);
      for (std::uint64_t i = 0; i < total; ++i) {
        probe[i] = i;
      }
    } else {
      // Sampled subset; the report discloses which messages were probed
      // and the maximum is a lower-bound estimate.
      Rng pick(derive_seed(seed, 0xffff));
      std::set<std::uint64_t> chosen;
      while (chosen.size() < 256) {
        chosen.insert(pick.uniform_below(total));
      }
      probe.assign(chosen.begin(), chosen.end());
    }
  }
  if (probe.empty()) {
    throw DomainError("estimate_failure_stats: no messages to probe");
  }

  const std::vector<double> grid =
      options.tail_grid.empty() ? default_tail_grid() : options.tail_grid;

  FailureStats stats;
  stats.trials_per_message = options.r_samples;
  stats.keys_per_randomness = options.keys_per_r;
  stats.messages_probed = probe.size();
  stats.seed = seed;
  stats.per_message.resize(probe.size());

  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(
      resolve_threads(options.threads), probe.size()));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < probe.size(); i += workers) {
        stats.per_message[i] = estimate_one_message(
            scheme, probe[i], options, grid, derive_seed(seed, i));
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }

  stats.tail.resize(grid.size());
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    stats.tail[gi].t = grid[gi];
  }
  bool first = true;
  for (const PerMessageEstimate& est : stats.per_message) {
    if (first || est.mean > stats.delta_ik) {
      stats.delta_ik = est.mean;
      stats.delta_stderr = est.mean_stderr;
      stats.argmax_mean_message = est.message;
    }
    if (first || est.sigma > stats.sigma) {
      stats.sigma = est.sigma;
      stats.sigma_stderr = est.sigma_stderr;
      stats.argmax_sigma_message = est.message;
    }
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
      if (first || est.tail[gi].value > stats.tail[gi].value) {
        stats.tail[gi].value = est.tail[gi].value;
        stats.tail[gi].stderr_value = est.tail[gi].stderr_value;
      }
    }
    first = false;
  }
  return stats;
}

}  // namespace folab
