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

#ifndef FOLAB_XOF_HPP_
#define FOLAB_XOF_HPP_

#include <cstdint>

#include "folab/bytes.hpp"

namespace folab {

/// SHAKE256 (FIPS 202) as the project's extendable-output function.
Bytes shake256(const Bytes& input, std::size_t out_len);

/// Lazily extendable view of one SHAKE256 output stream. Successive reads
/// return consistent prefixes of the same stream regardless of how the
/// internal buffer grows.
class XofStream {
 public:
  explicit XofStream(Bytes input);

  std::uint8_t byte_at(std::size_t index);
  Bytes range(std::size_t offset, std::size_t len);

 private:
  void ensure(std::size_t len);

  Bytes input_;
  Bytes buffer_;
};

/// Length-prefixed XOF input: tag || le64(|ctx|) || ctx || le64(|msg|) || msg.
/// This framing is the bit-exact convention used by production-mode oracles
/// and the implicit-rejection PRF.
Bytes xof_frame(std::uint8_t tag, const Bytes& context, const Bytes& message);

}  // namespace folab

#endif  // FOLAB_XOF_HPP_
