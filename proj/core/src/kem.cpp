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

#include "folab/kem.hpp"

#include <utility>

#include "folab/errors.hpp"
#include "folab/xof.hpp"

namespace folab {

FoKem::FoKem(const PkeScheme& pke, std::size_t key_bytes, Rejection rejection,
             Bytes prf_secret)
    : dpke_(pke),
      key_bytes_(key_bytes),
      rejection_(rejection),
      prf_secret_(std::move(prf_secret)) {
  if (key_bytes_ == 0) {
    throw DomainError("FoKem: key length must be positive");
  }
  if (rejection_ == Rejection::kImplicit && prf_secret_.empty()) {
    throw DomainError("FoKem: implicit rejection needs a PRF secret");
  }
}

FoKem::Encapsulation FoKem::encaps(Oracle& g, Oracle& h, const Bytes& pk,
                                   Rng& rng) const {
  Bytes m = pke().message_space().sample(rng);
  Encapsulation out;
  out.ciphertext = dpke_.encrypt(g, pk, m);
  out.key = h.eval(m);
  return out;
}

std::optional<Bytes> FoKem::decaps(Oracle& g, Oracle& h, const KeyPair& keys,
                                   const Bytes& c) const {
  std::optional<Bytes> m = dpke_.decrypt(g, keys.pk, keys.sk, c);
  if (!m) {
    if (rejection_ == Rejection::kImplicit) {
      return reject_key(c);
    }
    return std::nullopt;
  }
  return h.eval(*m);
}

Bytes FoKem::reject_key(const Bytes& c) const {
  XofStream stream(xof_frame(0x03, prf_secret_, c));
  return stream.range(0, key_bytes_);
}

}  // namespace folab
