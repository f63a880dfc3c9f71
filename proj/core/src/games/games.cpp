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

#include "folab/games/games.hpp"

#include <utility>

#include "folab/derand.hpp"
#include "folab/errors.hpp"

namespace folab {

namespace {

// Sub-seed roles. Matched-seed arms of a reduction re-derive identical
// keys, oracle tables and challenges from the same run seed.
enum SeedRole : std::uint64_t {
  kSeedKeygen = 0,
  kSeedGame = 1,
  kSeedOracleG = 2,
  kSeedOracleH = 3,
  kSeedAdversary = 4,
  kSeedPrf = 5,
};

Rng role_rng(std::uint64_t seed, SeedRole role) {
  return Rng(derive_seed(seed, role));
}

}  // namespace

GameOutcome run_ind_kem_game(const FoKem& kem, const IndKemAdversary& adv,
                             std::uint64_t seed, const BudgetCeilings& caps,
                             const KemGameSpec& spec) {
  const PkeScheme& pke = kem.pke();

  // Implicit rejection draws its PRF secret from the run seed so that the
  // whole run stays a function of (game, adversary, seed).
  FoKem run_kem = kem;
  if (kem.rejection() == Rejection::kImplicit) {
    Rng prf_rng = role_rng(seed, kSeedPrf);
    run_kem = FoKem(pke, kem.key_bytes(), Rejection::kImplicit,
                    prf_rng.bytes(32));
  }

  Rng keygen_rng = role_rng(seed, kSeedKeygen);
  KeyPair keys = pke.keygen(keygen_rng);

  RandomOracle g(pke.message_space(), pke.randomness_space(),
                 derive_seed(seed, kSeedOracleG));
  RandomOracle h(run_kem.key_space(), derive_seed(seed, kSeedOracleH));

  Rng game_rng = role_rng(seed, kSeedGame);
  const int b = game_rng.coin() ? 1 : 0;
  FoKem::Encapsulation challenge = run_kem.encaps(g, h, keys.pk, game_rng);
  Bytes fake_key = run_kem.key_space().sample(game_rng);

  GameOutcome outcome;
  outcome.seed = seed;
  outcome.challenge_bit = b;
  outcome.queries = QueryBudget(caps);

  SimOracles sim(run_kem, g, h, keys.pk);
  sim.set_challenge(challenge.ciphertext);

  auto odecrypt = [&](const Bytes& c) {
    return run_kem.derandomized().decrypt(g, keys.pk, keys.sk, c);
  };

  OracleHandles handles;
  handles.g = [&](const Bytes& m) {
    outcome.queries.charge_g();
    return g.logged_eval(pke, keys.pk, m);
  };
  handles.h = [&](const Bytes& m) {
    outcome.queries.charge_h();
    return h.eval(m);
  };
  if (spec.grant_decaps) {
    handles.decaps = [&](const Bytes& c) -> std::optional<Bytes> {
      outcome.queries.charge_d();
      if (c == challenge.ciphertext) {
        throw ForbiddenQueryError("decapsulation query on the challenge");
      }
      // The simulated answer is always evaluated first so oracle state
      // evolves identically across real and simulated arms.
      std::optional<Bytes> sim_answer;
      if (spec.decaps_mode == DecapsMode::kExtracting) {
        sim_answer = sim.decaps_double_prime(c, odecrypt, outcome.events);
      } else {
        sim_answer = sim.decaps_prime(c);
      }

      std::optional<Bytes> real_answer;
      if (spec.decaps_mode == DecapsMode::kReal || spec.track_events) {
        QueryComparison cmp =
            compare_real_vs_sim(run_kem, g, h, keys, c, sim_answer);
        real_answer = std::move(cmp.real_answer);
        if (cmp.diff) {
          ++outcome.events.diff_events;
        }
        if (cmp.guess) {
          ++outcome.events.guess_events;
        }
      }

      if (spec.abort_on_extraction && !outcome.events.fail_list.empty()) {
        throw AdversaryAborted{};
      }
      return spec.decaps_mode == DecapsMode::kReal ? real_answer : sim_answer;
    };
  }

  IndKemInput input{keys.pk, challenge.ciphertext,
                    b == 0 ? challenge.key : fake_key};
  Rng adv_rng = role_rng(seed, kSeedAdversary);
  try {
    outcome.guessed_bit = adv(input, handles, adv_rng);
  } catch (const AdversaryAborted&) {
    outcome.guessed_bit = -1;
  }

  if (!outcome.events.fail_list.empty()) {
    outcome.extracted_failure = outcome.events.fail_list.front();
  }

  if (spec.score_extraction) {
    // FFP-CCA win condition for the extracting reduction: the plaintext it
    // returns must verifiably fail under the run's key pair.
    outcome.won = false;
    if (outcome.extracted_failure) {
      const Bytes& m = *outcome.extracted_failure;
      Bytes c = run_kem.derandomized().encrypt(g, keys.pk, m);
      std::optional<Bytes> back =
          run_kem.derandomized().decrypt(g, keys.pk, keys.sk, c);
      outcome.won = !back || *back != m;
    }
  } else {
    outcome.won = outcome.guessed_bit == b;
  }
  return outcome;
}

GameOutcome run_ind_cca_kem(const FoKem& kem, const IndKemAdversary& adv,
                            std::uint64_t seed, const BudgetCeilings& caps) {
  KemGameSpec spec;
  spec.grant_decaps = true;
  spec.decaps_mode = DecapsMode::kReal;
  return run_ind_kem_game(kem, adv, seed, caps, spec);
}

GameOutcome run_ind_cpa_kem(const FoKem& kem, const IndKemAdversary& adv,
                            std::uint64_t seed, const BudgetCeilings& caps) {
  KemGameSpec spec;
  spec.grant_decaps = false;
  spec.track_events = false;
  return run_ind_kem_game(kem, adv, seed, caps, spec);
}

GameOutcome run_ow_cpa_pke(const PkeScheme& scheme, const OwAdversary& adv,
                           std::uint64_t seed, const BudgetCeilings& caps) {
  Rng keygen_rng = role_rng(seed, kSeedKeygen);
  KeyPair keys = scheme.keygen(keygen_rng);
  RandomOracle g(scheme.message_space(), scheme.randomness_space(),
                 derive_seed(seed, kSeedOracleG));

  Rng game_rng = role_rng(seed, kSeedGame);
  Bytes m_star = scheme.message_space().sample(game_rng);
  Bytes r_star = scheme.randomness_space().sample(game_rng);
  Bytes c_star = scheme.encrypt(keys.pk, m_star, r_star);

  GameOutcome outcome;
  outcome.seed = seed;
  outcome.queries = QueryBudget(caps);

  OracleHandles handles;
  handles.g = [&](const Bytes& m) {
    outcome.queries.charge_g();
    return g.logged_eval(scheme, keys.pk, m);
  };

  Rng adv_rng = role_rng(seed, kSeedAdversary);
  Bytes guess = adv(OwInput{keys.pk, c_star}, handles, adv_rng);
  outcome.won = guess == m_star;
  return outcome;
}

GameOutcome run_ind_cpa_pke(const PkeScheme& scheme, const IndPkeAdversary& adv,
                            std::uint64_t seed, const BudgetCeilings& caps) {
  Rng keygen_rng = role_rng(seed, kSeedKeygen);
  KeyPair keys = scheme.keygen(keygen_rng);
  RandomOracle g(scheme.message_space(), scheme.randomness_space(),
                 derive_seed(seed, kSeedOracleG));

  GameOutcome outcome;
  outcome.seed = seed;
  outcome.queries = QueryBudget(caps);

  OracleHandles handles;
  handles.g = [&](const Bytes& m) {
    outcome.queries.charge_g();
    return g.logged_eval(scheme, keys.pk, m);
  };

  Rng adv_rng = role_rng(seed, kSeedAdversary);
  auto [m0, m1] = adv.choose(keys.pk, handles, adv_rng);
  if (!scheme.message_space().contains(m0) ||
      !scheme.message_space().contains(m1)) {
    throw DomainError("IND-CPA: chosen messages outside the message space");
  }

  Rng game_rng = role_rng(seed, kSeedGame);
  const int b = game_rng.coin() ? 1 : 0;
  Bytes r_star = scheme.randomness_space().sample(game_rng);
  Bytes c_star = scheme.encrypt(keys.pk, b == 0 ? m0 : m1, r_star);

  outcome.challenge_bit = b;
  outcome.guessed_bit = adv.guess(keys.pk, c_star, handles, adv_rng);
  outcome.won = outcome.guessed_bit == b;
  return outcome;
}

GameOutcome run_ffp_atk(const PkeScheme& base, const FfpAdversary& adv,
                        FfpAtk atk, std::uint64_t seed,
                        const BudgetCeilings& caps) {
  DerandomizedPke dpke(base);
  Rng keygen_rng = role_rng(seed, kSeedKeygen);
  KeyPair keys = base.keygen(keygen_rng);
  RandomOracle g(base.message_space(), base.randomness_space(),
                 derive_seed(seed, kSeedOracleG));

  GameOutcome outcome;
  outcome.seed = seed;
  outcome.queries = QueryBudget(caps);

  OracleHandles handles;
  handles.g = [&](const Bytes& m) {
    outcome.queries.charge_g();
    return g.logged_eval(base, keys.pk, m);
  };
  if (atk == FfpAtk::kCca) {
    handles.decrypt = [&](const Bytes& c) {
      outcome.queries.charge_d();
      return dpke.decrypt(g, keys.pk, keys.sk, c);
    };
  }

  Rng adv_rng = role_rng(seed, kSeedAdversary);
  std::optional<Bytes> m = adv(keys.pk, handles, adv_rng);
  outcome.won = false;
  if (m && base.message_space().contains(*m)) {
    Bytes c = dpke.encrypt(g, keys.pk, *m);
    std::optional<Bytes> back = dpke.decrypt(g, keys.pk, keys.sk, c);
    outcome.won = !back || *back != *m;
    if (outcome.won) {
      outcome.extracted_failure = *m;
    }
  }
  return outcome;
}

GameOutcome run_ffp_nk(const PkeScheme& base, const FfpAdversary& adv,
                       std::uint64_t seed, const BudgetCeilings& caps) {
  RandomOracle g(base.message_space(), base.randomness_space(),
                 derive_seed(seed, kSeedOracleG));

  GameOutcome outcome;
  outcome.seed = seed;
  outcome.queries = QueryBudget(caps);

  OracleHandles handles;
  // No key material exists yet, so only the bare oracle is available.
  handles.g = [&](const Bytes& m) {
    outcome.queries.charge_g();
    return g.eval(m);
  };

  Rng adv_rng = role_rng(seed, kSeedAdversary);
  std::optional<Bytes> m = adv(Bytes{}, handles, adv_rng);

  // Keys are sampled only after the adversary commits to its message.
  Rng keygen_rng = role_rng(seed, kSeedKeygen);
  KeyPair keys = base.keygen(keygen_rng);

  outcome.won = false;
  if (m && base.message_space().contains(*m)) {
    Bytes c = base.encrypt(keys.pk, *m, g.eval(*m));
    std::optional<Bytes> back = base.decrypt(keys.sk, c);
    outcome.won = !back || *back != *m;
  }
  return outcome;
}

GameOutcome run_ffp_ng(const PkeScheme& base, const FfpNgAdversary& adv,
                       std::uint64_t seed, const BudgetCeilings& caps) {
  Rng keygen_rng = role_rng(seed, kSeedKeygen);
  KeyPair keys0 = base.keygen(keygen_rng);
  KeyPair keys1 = base.keygen(keygen_rng);

  Rng game_rng = role_rng(seed, kSeedGame);
  const int b = game_rng.coin() ? 1 : 0;

  GameOutcome outcome;
  outcome.seed = seed;
  outcome.challenge_bit = b;
  outcome.queries = QueryBudget(caps);

  unsigned fco_queries = 0;
  OracleHandles handles;
  handles.fco = [&](const Bytes& m, const Bytes& r) -> bool {
    if (++fco_queries > 1) {
      throw ForbiddenQueryError("FCO allows exactly one query");
    }
    if (!base.message_space().contains(m) ||
        !base.randomness_space().contains(r)) {
      throw DomainError("FCO: query outside declared spaces");
    }
    const KeyPair& kp = b == 0 ? keys0 : keys1;
    Bytes c = base.encrypt(kp.pk, m, r);
    std::optional<Bytes> back = base.decrypt(kp.sk, c);
    return !back || *back != m;
  };

  Rng adv_rng = role_rng(seed, kSeedAdversary);
  outcome.guessed_bit = adv(keys0.pk, handles, adv_rng);
  outcome.won = outcome.guessed_bit == b;
  return outcome;
}

}  // namespace folab
