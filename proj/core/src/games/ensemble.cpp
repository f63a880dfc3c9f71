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

#include "folab/games/ensemble.hpp"

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

#include "folab/errors.hpp"

namespace folab {

WilsonInterval wilson_interval(std::uint64_t wins, std::uint64_t trials,
                               double z) {
  if (trials == 0) {
    return {0.0, 1.0};
  }
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(wins) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double proportion_stderr(std::uint64_t wins, std::uint64_t trials) {
  if (trials == 0) {
    return 0.0;
  }
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(wins) / n;
  return std::sqrt(p * (1.0 - p) / n);
}

TwoProportionTest two_proportion_test(std::uint64_t wins0,
                                      std::uint64_t trials0,
                                      std::uint64_t wins1,
                                      std::uint64_t trials1) {
  TwoProportionTest out;
  if (trials0 == 0 || trials1 == 0) {
    return out;
  }
  const double n0 = static_cast<double>(trials0);
  const double n1 = static_cast<double>(trials1);
  const double p0 = static_cast<double>(wins0) / n0;
  const double p1 = static_cast<double>(wins1) / n1;
  const double pooled =
      static_cast<double>(wins0 + wins1) / (n0 + n1);
  const double se =
      std::sqrt(pooled * (1.0 - pooled) * (1.0 / n0 + 1.0 / n1));
  if (se == 0.0) {
    out.z = 0.0;
    out.p_value = 1.0;
    return out;
  }
  out.z = (p0 - p1) / se;
  out.p_value = std::erfc(std::abs(out.z) / std::sqrt(2.0));
  return out;
}

double EnsembleResult::rate() const {
  return trials == 0 ? 0.0 : static_cast<double>(wins) / trials;
}

double EnsembleResult::stderr_rate() const {
  return proportion_stderr(wins, trials);
}

double EnsembleResult::advantage() const { return std::abs(rate() - 0.5); }

WilsonInterval EnsembleResult::wilson(double z) const {
  return wilson_interval(wins, trials, z);
}

void EnsembleResult::absorb(const GameOutcome& outcome) {
  ++trials;
  if (outcome.won) {
    ++wins;
  }
  diff_events += outcome.events.diff_events;
  guess_events += outcome.events.guess_events;
  if (outcome.events.diff_events > 0) {
    ++runs_with_diff;
  }
  if (outcome.events.guess_events > 0) {
    ++runs_with_guess;
  }
  if (outcome.extracted_failure) {
    ++extractions;
  }
  if (outcome.challenge_bit == 0) {
    ++b0_trials;
    if (outcome.guessed_bit == 1) {
      ++b0_guessed_one;
    }
  } else if (outcome.challenge_bit == 1) {
    ++b1_trials;
    if (outcome.guessed_bit == 1) {
      ++b1_guessed_one;
    }
  }
}

void EnsembleResult::merge(const EnsembleResult& other) {
  trials += other.trials;
  wins += other.wins;
  diff_events += other.diff_events;
  guess_events += other.guess_events;
  runs_with_diff += other.runs_with_diff;
  runs_with_guess += other.runs_with_guess;
  extractions += other.extractions;
  b0_trials += other.b0_trials;
  b0_guessed_one += other.b0_guessed_one;
  b1_trials += other.b1_trials;
  b1_guessed_one += other.b1_guessed_one;
}

unsigned resolve_threads(unsigned requested) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) {
    hw = 1;
  }
  unsigned limit = hw;
  if (const char* env = std::getenv("FO_LAB_THREADS")) {
    char* end = nullptr;
    unsigned long parsed = std::strtoul(env, &end, 10);
    if (end != env && parsed > 0) {
      limit = static_cast<unsigned>(parsed);
    }
  }
  unsigned threads = requested == 0 ? std::min(hw, 8u) : requested;
  return std::max(1u, std::min(threads, limit));
}

EnsembleResult run_ensemble(
    const std::function<GameOutcome(std::uint64_t seed)>& one_run,
    std::uint64_t trials, std::uint64_t master_seed, unsigned threads) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads),
                                                    std::max<std::uint64_t>(
                                                        trials, 1)));
  std::vector<EnsembleResult> partials(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr failure;
  std::mutex failure_mutex;

  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (std::uint64_t i = w; i < trials; i += workers) {
          partials[w].absorb(one_run(derive_seed(master_seed, i)));
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }

  EnsembleResult total;
  for (const auto& part : partials) {
    total.merge(part);
  }
  return total;
}

}  // namespace folab
