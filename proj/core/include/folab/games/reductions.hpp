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

#ifndef FOLAB_GAMES_REDUCTIONS_HPP_
#define FOLAB_GAMES_REDUCTIONS_HPP_

#include <cstdint>

#include "folab/games/games.hpp"

namespace folab {

/// One matched-seed execution of the three arms of the CCA-to-CPA+FFP
/// decomposition: the adversary against the real decapsulation oracle, the
/// wrapped adversary answered by the preimage-list simulation, and the
/// failure-extracting wrapper whose win is a verifiably failing plaintext.
struct ReductionTriple {
  GameOutcome cca;
  GameOutcome cpa_wrapped;
  GameOutcome ffp_extractor;
};

ReductionTriple run_cca_to_cpa_ffp(const FoKem& kem, const IndKemAdversary& adv,
                                   std::uint64_t seed,
                                   const BudgetCeilings& caps);

/// Builds the guessing reduction from an FFP-CCA adversary to an FFP-CPA
/// adversary: pick i uniformly from {1, ..., q_d + 1}, run the inner
/// adversary against the simulated decryption oracle, stop at its i-th
/// decryption query and output that query's logged preimage (or the inner
/// output when i = q_d + 1). Inner adversaries making fewer than q_d
/// queries are padded with queries on a fixed sentinel ciphertext.
FfpAdversary reduction_ffp_cca_to_cpa(const PkeScheme& scheme,
                                      FfpAdversary cca_adversary,
                                      std::uint64_t q_d);

/// The sentinel ciphertext used for query padding.
const Bytes& ffp_padding_sentinel();

}  // namespace folab

#endif  // FOLAB_GAMES_REDUCTIONS_HPP_
