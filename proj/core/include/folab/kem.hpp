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

#ifndef FOLAB_KEM_HPP_
#define FOLAB_KEM_HPP_

#include <optional>

#include "folab/derand.hpp"
#include "folab/oracle.hpp"
#include "folab/pke.hpp"

namespace folab {

enum class Rejection {
  kExplicit,  // decapsulation returns nothing on an invalid ciphertext
  kImplicit,  // decapsulation returns PRF(prf_secret, c) instead
};

/// The FO key encapsulation mechanism over a derandomized PKE:
/// encapsulation samples m, encrypts with coins G(m) and derives the key
/// as H(m); decapsulation re-encrypts the decrypted plaintext and rejects
/// on mismatch, explicitly or implicitly.
class FoKem {
 public:
  FoKem(const PkeScheme& pke, std::size_t key_bytes, Rejection rejection,
        Bytes prf_secret = {});

  struct Encapsulation {
    Bytes key;
    Bytes ciphertext;
  };

  Encapsulation encaps(Oracle& g, Oracle& h, const Bytes& pk, Rng& rng) const;

  /// Explicit variant: H(m') when the re-encryption check passes, nullopt
  /// otherwise. Implicit variant: never nullopt; rejections yield the
  /// pseudorandom key PRF(prf_secret, c).
  std::optional<Bytes> decaps(Oracle& g, Oracle& h, const KeyPair& keys,
                              const Bytes& c) const;

  const DerandomizedPke& derandomized() const { return dpke_; }
  const PkeScheme& pke() const { return dpke_.base(); }
  std::size_t key_bytes() const { return key_bytes_; }
  Rejection rejection() const { return rejection_; }
  ByteSpace key_space() const { return ByteSpace::full_bytes(key_bytes_); }

  /// Implicit-rejection PRF: XOF(0x03 || prf_secret || c) truncated to the
  /// key length. Deterministic per (secret, ciphertext).
  Bytes reject_key(const Bytes& c) const;

 private:
  DerandomizedPke dpke_;
  std::size_t key_bytes_;
  Rejection rejection_;
  Bytes prf_secret_;
};

}  // namespace folab

#endif  // FOLAB_KEM_HPP_
