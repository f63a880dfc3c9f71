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

#ifndef FOLAB_BYTES_HPP_
#define FOLAB_BYTES_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace folab {

// Byte strings are the universal wire type for messages, randomness,
// ciphertexts and keys. The canonical total order on encoded values is
// std::vector's lexicographic order, which coincides with numeric order
// for the fixed-width big-endian encodings used throughout.
using Bytes = std::vector<std::uint8_t>;

std::string to_hex(const Bytes& b);

// Fixed-width big-endian integer encoding; width must be large enough.
Bytes encode_be(std::uint64_t value, std::size_t width);
std::uint64_t decode_be(const Bytes& b, std::size_t offset, std::size_t width);

// Little-endian 64-bit append, used in length-prefixed XOF inputs.
void append_le64(Bytes& out, std::uint64_t value);
void append_bytes(Bytes& out, const Bytes& chunk);

}  // namespace folab

#endif  // FOLAB_BYTES_HPP_
