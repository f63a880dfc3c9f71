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

#include "folab/games/reductions.hpp"

#include <utility>

#include "folab/oracle.hpp"

namespace folab {

ReductionTriple run_cca_to_cpa_ffp(const FoKem& kem, const IndKemAdversary& adv,
                                   std::uint64_t seed,
                                   const BudgetCeilings& caps) {
  ReductionTriple triple;

  KemGameSpec real;
  real.grant_decaps = true;
  real.decaps_mode = DecapsMode::kReal;
  triple.cca = run_ind_kem_game(kem, adv, seed, caps, real);

  // The wrapped adversary plays IND-CPA: its own game grants no
  // decapsulation oracle, and the inner adversary's queries are answered
  // from the preimage list.
  KemGameSpec simulated;
  simulated.grant_decaps = true;
  simulated.decaps_mode = DecapsMode::kSimulated;
  triple.cpa_wrapped = run_ind_kem_game(kem, adv, seed, caps, simulated);

  // The extractor aborts the inner adversary at the first fail-list
  // insertion and wins iff that plaintext verifiably fails.
  KemGameSpec extracting;
  extracting.grant_decaps = true;
  extracting.decaps_mode = DecapsMode::kExtracting;
  extracting.abort_on_extraction = true;
  extracting.score_extraction = true;
  triple.ffp_extractor = run_ind_kem_game(kem, adv, seed, caps, extracting);

  return triple;
}

const Bytes& ffp_padding_sentinel() {
  static const Bytes sentinel{};  // no honest ciphertext is empty
  return sentinel;
}

FfpAdversary reduction_ffp_cca_to_cpa(const PkeScheme& scheme,
                                      FfpAdversary cca_adversary,
                                      std::uint64_t q_d) {
  return [&scheme, cca = std::move(cca_adversary), q_d](
             const Bytes& pk, OracleHandles& handles,
             Rng& rng) -> std::optional<Bytes> {
    const std::uint64_t stop_at = rng.uniform_below(q_d + 1) + 1;

    PreimageList lg;
    std::uint64_t decrypt_queries = 0;
    std::optional<Bytes> captured;

    OracleHandles inner = handles;
    inner.g = [&handles, &lg, &scheme, &pk](const Bytes& m) {
      Bytes r = handles.g(m);
      lg.record(m, scheme.encrypt(pk, m, r));
      return r;
    };
    inner.decrypt = [&](const Bytes& c) -> std::optional<Bytes> {
      ++decrypt_queries;
      if (decrypt_queries == stop_at) {
        captured = c;
        throw AdversaryAborted{};
      }
      return lg.first_preimage(c);
    };

    std::optional<Bytes> inner_output;
    try {
      inner_output = cca(pk, inner, rng);
    } catch (const AdversaryAborted&) {
    }

    if (stop_at == q_d + 1) {
      return inner_output;
    }
    if (captured) {
      return lg.first_preimage(*captured);
    }
    // The inner adversary made fewer than stop_at queries; the remaining
    // ones are padded with the sentinel ciphertext.
    return lg.first_preimage(ffp_padding_sentinel());
  };
}

}  // namespace folab
