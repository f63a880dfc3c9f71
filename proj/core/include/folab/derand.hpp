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

#ifndef FOLAB_DERAND_HPP_
#define FOLAB_DERAND_HPP_

#include <optional>

#include "folab/oracle.hpp"
#include "folab/pke.hpp"

namespace folab {

/// Derandomizing transform: encryption coins come from G(m) and decryption
/// re-encrypts to verify the ciphertext.
class DerandomizedPke {
 public:
  explicit DerandomizedPke(const PkeScheme& base) : base_(&base) {}

  const PkeScheme& base() const { return *base_; }

  /// Enc1(pk, m) = Enc(pk, m; G(m)).
  Bytes encrypt(Oracle& g, const Bytes& pk, const Bytes& m) const;

  /// Dec1: base decryption followed by the re-encryption check. Returns
  /// nullopt when the base rejects or re-encryption does not reproduce c.
  std::optional<Bytes> decrypt(Oracle& g, const Bytes& pk, const Bytes& sk,
                               const Bytes& c) const;

  /// Enc1 through the logging wrapper G'; records (m, c) in g's preimage
  /// list. Game mode only.
  Bytes encrypt_logged(RandomOracle& g, const Bytes& pk, const Bytes& m) const;

 private:
  const PkeScheme* base_;
};

}  // namespace folab

#endif  // FOLAB_DERAND_HPP_
