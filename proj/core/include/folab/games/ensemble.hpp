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

#ifndef FOLAB_GAMES_ENSEMBLE_HPP_
#define FOLAB_GAMES_ENSEMBLE_HPP_

#include <cstdint>
#include <functional>

#include "folab/games/games.hpp"

namespace folab {

struct WilsonInterval {
  double low = 0.0;
  double high = 1.0;
};

/// Wilson score interval for a binomial proportion at z standard normal
/// units.
WilsonInterval wilson_interval(std::uint64_t wins, std::uint64_t trials,
                               double z);

double proportion_stderr(std::uint64_t wins, std::uint64_t trials);

struct TwoProportionTest {
  double z = 0.0;
  double p_value = 1.0;
};

/// Pooled two-sided z-test of equal proportions.
TwoProportionTest two_proportion_test(std::uint64_t wins0,
                                      std::uint64_t trials0,
                                      std::uint64_t wins1,
                                      std::uint64_t trials1);

/// Order-independent aggregate of many game runs. merge() is commutative,
/// so trials may shard across workers in any order.
struct EnsembleResult {
  std::uint64_t trials = 0;
  std::uint64_t wins = 0;
  std::uint64_t diff_events = 0;
  std::uint64_t guess_events = 0;
  std::uint64_t runs_with_diff = 0;
  std::uint64_t runs_with_guess = 0;
  std::uint64_t extractions = 0;
  // Conditional tallies by challenge bit (guessed-one counts), for
  // distinguishing games.
  std::uint64_t b0_trials = 0;
  std::uint64_t b0_guessed_one = 0;
  std::uint64_t b1_trials = 0;
  std::uint64_t b1_guessed_one = 0;

  double rate() const;
  double stderr_rate() const;
  /// |win rate - 1/2| for guessing games.
  double advantage() const;
  WilsonInterval wilson(double z) const;

  void absorb(const GameOutcome& outcome);
  void merge(const EnsembleResult& other);
};

/// Worker-thread resolution: explicit request, else the FO_LAB_THREADS
/// environment cap, else hardware concurrency.
unsigned resolve_threads(unsigned requested = 0);

/// Runs `trials` independent executions with per-trial derived seeds
/// seed_i = XOF(master || i) and reduces the outcomes.
EnsembleResult run_ensemble(
    const std::function<GameOutcome(std::uint64_t seed)>& one_run,
    std::uint64_t trials, std::uint64_t master_seed, unsigned threads = 0);

}  // namespace folab

#endif  // FOLAB_GAMES_ENSEMBLE_HPP_
