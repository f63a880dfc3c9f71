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

#ifndef FOLAB_TOY_MICRO_LWE_HPP_
#define FOLAB_TOY_MICRO_LWE_HPP_

#include <cstdint>
#include <vector>

#include "folab/pke.hpp"

namespace folab {

/// Miniature single-bit LWE scheme. The public key holds `samples` LWE
/// rows (a_i, b_i = <a_i, s> + e_i mod q); encryption selects a subset of
/// rows (the randomness is the selection bitmask), sums them, and adds
/// m * floor(q/2) to the b-part. Decryption recovers the bit by nearest
/// distance to 0 vs floor(q/2) modulo q, so it fails exactly when the
/// accumulated noise sum over the selected rows crosses the q/4 decision
/// radius around the encoded point (fails_for_noise gives the precise
/// integer condition; for odd q the m = 1 encode point sits half a unit
/// below q/2, shifting that bit's boundary by one).
class MicroLwePke final : public PkeScheme {
 public:
  struct Params {
    unsigned n = 2;          // secret dimension, at most 8
    unsigned q = 17;         // modulus, at most 257
    unsigned samples = 8;    // LWE rows in the public key; |R| = 2^samples
    std::vector<int> chi;    // noise support table, e.g. {-1, 0, 1}
  };

  explicit MicroLwePke(Params params);

  std::string name() const override { return "micro-lwe"; }
  const ByteSpace& message_space() const override { return msg_space_; }
  const ByteSpace& randomness_space() const override { return rand_space_; }

  KeyPair keygen(Rng& rng) const override;
  Bytes encrypt(const Bytes& pk, const Bytes& m,
                const Bytes& r) const override;
  std::optional<Bytes> decrypt(const Bytes& sk, const Bytes& c) const override;

  const Params& params() const { return params_; }

  /// Accumulated noise of a subset selection under the given secret key
  /// (needs the key pair to recover the per-row errors).
  int noise_for(const KeyPair& kp, std::uint64_t subset_mask) const;
  /// Whether a given accumulated noise flips message bit m.
  bool fails_for_noise(unsigned m, int noise) const;

 private:
  std::vector<unsigned> parse_rows(const Bytes& pk) const;

  Params params_;
  ByteSpace msg_space_;
  ByteSpace rand_space_;
};

}  // namespace folab

#endif  // FOLAB_TOY_MICRO_LWE_HPP_
