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

#include "folab/bytes.hpp"

#include "folab/errors.hpp"

namespace folab {

std::string to_hex(const Bytes& b) {
  static const char* kDigits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * b.size());
  for (std::uint8_t v : b) {
    out.push_back(kDigits[v >> 4]);
    out.push_back(kDigits[v & 0x0f]);
  }
  return out;
}

Bytes encode_be(std::uint64_t value, std::size_t width) {
  if (width < 8 && width < sizeof(value) && (value >> (8 * width)) != 0) {
    throw DomainError("encode_be: value does not fit in width");
  }
  Bytes out(width, 0);
  for (std::size_t i = 0; i < width && i < 8; ++i) {
    out[width - 1 - i] = static_cast<std::uint8_t>(value >> (8 * i));
  }
  return out;
}

std::uint64_t decode_be(const Bytes& b, std::size_t offset, std::size_t width) {
  if (offset + width > b.size()) {
    throw DomainError("decode_be: out of range");
  }
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < width; ++i) {
    value = (value << 8) | b[offset + i];
  }
  return value;
}

void append_le64(Bytes& out, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
  }
}

void append_bytes(Bytes& out, const Bytes& chunk) {
  out.insert(out.end(), chunk.begin(), chunk.end());
}

}  // namespace folab
