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

#ifndef FOLAB_SIM_ORACLES_HPP_
#define FOLAB_SIM_ORACLES_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "folab/kem.hpp"
#include "folab/oracle.hpp"

namespace folab {

/// Event log of one game execution against the simulated decapsulation
/// oracles. fail_list holds extracted plaintexts in insertion order; every
/// entry can be re-verified with the secret key.
struct DecapsEventLog {
  std::vector<Bytes> fail_list;
  std::uint64_t diff_events = 0;
  std::uint64_t guess_events = 0;

  bool operator==(const DecapsEventLog&) const = default;
};

/// Secret-key-free simulations of decapsulation and decryption, answering
/// from the preimage list collected by the logging oracle G'.
class SimOracles {
 public:
  SimOracles(const FoKem& kem, RandomOracle& g, Oracle& h, Bytes pk);

  /// Challenge exclusion: queries on the challenge ciphertext raise a
  /// forbidden-query error rather than returning a protocol rejection.
  void set_challenge(Bytes challenge_ct);

  /// Simulated decapsulation: H(L_G^{-1}(c)), or nothing when no preimage
  /// was logged. Uses no secret key.
  std::optional<Bytes> decaps_prime(const Bytes& c);

  /// Failure-extracting variant: additionally asks the supplied decryption
  /// oracle and appends the preimage to the fail list when the two answers
  /// name different plaintexts.
  std::optional<Bytes> decaps_double_prime(
      const Bytes& c,
      const std::function<std::optional<Bytes>(const Bytes&)>& odecrypt,
      DecapsEventLog& log);

  /// Simulated decryption for the derandomized scheme: L_G^{-1}(c).
  std::optional<Bytes> decrypt_prime(const Bytes& c) const;

 private:
  void check_challenge(const Bytes& c) const;

  const FoKem* kem_;
  RandomOracle* g_;
  Oracle* h_;
  Bytes pk_;
  std::optional<Bytes> challenge_;
};

/// Classification of one decapsulation query: DIFF when the real and
/// simulated answers differ, GUESS when the ciphertext passes the
/// re-encryption check without a prior logged G-query on its decryption.
struct QueryComparison {
  std::optional<Bytes> real_answer;
  bool diff = false;
  bool guess = false;
};

QueryComparison compare_real_vs_sim(const FoKem& kem, RandomOracle& g,
                                    Oracle& h, const KeyPair& keys,
                                    const Bytes& c,
                                    const std::optional<Bytes>& sim_answer);

}  // namespace folab

#endif  // FOLAB_SIM_ORACLES_HPP_
