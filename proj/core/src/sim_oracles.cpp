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

#include "folab/sim_oracles.hpp"

#include <utility>

#include "folab/errors.hpp"

namespace folab {

SimOracles::SimOracles(const FoKem& kem, RandomOracle& g, Oracle& h, Bytes pk)
    : kem_(&kem), g_(&g), h_(&h), pk_(std::move(pk)) {}

void SimOracles::set_challenge(Bytes challenge_ct) {
  challenge_ = std::move(challenge_ct);
}

void SimOracles::check_challenge(const Bytes& c) const {
  if (challenge_ && c == *challenge_) {
    throw ForbiddenQueryError("decapsulation query on the challenge");
  }
}

std::optional<Bytes> SimOracles::decaps_prime(const Bytes& c) {
  check_challenge(c);
  std::optional<Bytes> m = g_->preimages().first_preimage(c);
  if (!m) {
    return std::nullopt;
  }
  return h_->eval(*m);
}

std::optional<Bytes> SimOracles::decaps_double_prime(
    const Bytes& c,
    const std::function<std::optional<Bytes>(const Bytes&)>& odecrypt,
    DecapsEventLog& log) {
  check_challenge(c);
  std::optional<Bytes> m = g_->preimages().first_preimage(c);
  std::optional<Bytes> decrypted = odecrypt(c);
  if (m && (!decrypted || *decrypted != *m)) {
    log.fail_list.push_back(*m);
  }
  if (!m) {
    return std::nullopt;
  }
  return h_->eval(*m);
}

std::optional<Bytes> SimOracles::decrypt_prime(const Bytes& c) const {
  return g_->preimages().first_preimage(c);
}

QueryComparison compare_real_vs_sim(const FoKem& kem, RandomOracle& g,
                                    Oracle& h, const KeyPair& keys,
                                    const Bytes& c,
                                    const std::optional<Bytes>& sim_answer) {
  QueryComparison result;
  result.real_answer = kem.decaps(g, h, keys, c);
  result.diff = result.real_answer != sim_answer;

  // GUESS: the ciphertext would pass the re-encryption check, but its
  // decryption was never logged through G'.
  std::optional<Bytes> m = kem.pke().decrypt(keys.sk, c);
  if (m && kem.derandomized().encrypt(g, keys.pk, *m) == c &&
      !g.preimages().first_preimage(c)) {
    result.guess = true;
  }
  return result;
}

}  // namespace folab
