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

#include "folab/derand.hpp"

#include "folab/errors.hpp"

namespace folab {

Bytes DerandomizedPke::encrypt(Oracle& g, const Bytes& pk,
                               const Bytes& m) const {
  if (!base_->message_space().contains(m)) {
    throw DomainError("DerandomizedPke: message outside space");
  }
  return base_->encrypt(pk, m, g.eval(m));
}

std::optional<Bytes> DerandomizedPke::decrypt(Oracle& g, const Bytes& pk,
                                              const Bytes& sk,
                                              const Bytes& c) const {
  std::optional<Bytes> m = base_->decrypt(sk, c);
  if (!m) {
    return std::nullopt;
  }
  if (base_->encrypt(pk, *m, g.eval(*m)) != c) {
    return std::nullopt;
  }
  return m;
}

Bytes DerandomizedPke::encrypt_logged(RandomOracle& g, const Bytes& pk,
                                      const Bytes& m) const {
  if (!base_->message_space().contains(m)) {
    throw DomainError("DerandomizedPke: message outside space");
  }
  return base_->encrypt(pk, m, g.logged_eval(*base_, pk, m));
}

}  // namespace folab
