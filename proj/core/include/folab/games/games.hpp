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

#ifndef FOLAB_GAMES_GAMES_HPP_
#define FOLAB_GAMES_GAMES_HPP_

#include <cstdint>
#include <optional>

#include "folab/games/adversary.hpp"
#include "folab/games/budget.hpp"
#include "folab/kem.hpp"
#include "folab/pke.hpp"
#include "folab/sim_oracles.hpp"

namespace folab {

/// Result of one game execution. Reproducible: identical (game, adversary,
/// seed) give identical outcomes including the event log.
struct GameOutcome {
  bool won = false;
  std::uint64_t seed = 0;
  DecapsEventLog events;
  QueryBudget queries;
  int challenge_bit = -1;
  int guessed_bit = -1;
  std::optional<Bytes> extracted_failure;

  bool operator==(const GameOutcome&) const = default;
};

/// How decapsulation queries are answered in a KEM game run.
enum class DecapsMode {
  kReal,         // the genuine decapsulation oracle
  kSimulated,    // the preimage-list simulation (reduction to IND-CPA)
  kExtracting,   // simulation plus failing-plaintext extraction
};

struct KemGameSpec {
  bool grant_decaps = true;       // false = IND-CPA shape
  DecapsMode decaps_mode = DecapsMode::kReal;
  bool track_events = true;       // shadow-compare real vs simulated answers
  bool abort_on_extraction = false;
  bool score_extraction = false;  // won = extracted plaintext verifiably fails
};

/// Shared KEM-game skeleton: keygen, challenge encapsulation, real-or-fake
/// key, adversary run, win decision. Seed streams are derived per role so
/// matched-seed arms see identical keys, oracles and challenges.
GameOutcome run_ind_kem_game(const FoKem& kem, const IndKemAdversary& adv,
                             std::uint64_t seed, const BudgetCeilings& caps,
                             const KemGameSpec& spec);

GameOutcome run_ind_cca_kem(const FoKem& kem, const IndKemAdversary& adv,
                            std::uint64_t seed, const BudgetCeilings& caps);
GameOutcome run_ind_cpa_kem(const FoKem& kem, const IndKemAdversary& adv,
                            std::uint64_t seed, const BudgetCeilings& caps);

GameOutcome run_ow_cpa_pke(const PkeScheme& scheme, const OwAdversary& adv,
                           std::uint64_t seed, const BudgetCeilings& caps);
GameOutcome run_ind_cpa_pke(const PkeScheme& scheme, const IndPkeAdversary& adv,
                            std::uint64_t seed, const BudgetCeilings& caps);

enum class FfpAtk { kCpa, kCca };

/// Find-failing-plaintext game for the derandomized scheme. CCA grants the
/// re-encryption-checked decryption oracle; CPA grants only the random
/// oracle.
GameOutcome run_ffp_atk(const PkeScheme& base, const FfpAdversary& adv,
                        FfpAtk atk, std::uint64_t seed,
                        const BudgetCeilings& caps);

/// Key-independent variant: the adversary sees no key material and commits
/// to its message before the key pair is sampled.
GameOutcome run_ffp_nk(const PkeScheme& base, const FfpAdversary& adv,
                       std::uint64_t seed, const BudgetCeilings& caps);

/// Own-key vs fresh-key failure distinguishing game with a single
/// failure-checking-oracle query; a second query is a violation.
GameOutcome run_ffp_ng(const PkeScheme& base, const FfpNgAdversary& adv,
                       std::uint64_t seed, const BudgetCeilings& caps);

}  // namespace folab

#endif  // FOLAB_GAMES_GAMES_HPP_
