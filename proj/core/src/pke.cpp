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

#include "folab/pke.hpp"

#include "folab/errors.hpp"

namespace folab {

namespace {

std::size_t min_width(std::uint64_t size) {
  std::size_t width = 1;
  // Largest index is size-1.
  std::uint64_t max_index = size - 1;
  while (width < 8 && (max_index >> (8 * width)) != 0) {
    ++width;
  }
  return width;
}

}  // namespace

ByteSpace ByteSpace::indexed(std::uint64_t size) {
  if (size == 0) {
    throw DomainError("ByteSpace: empty space");
  }
  return ByteSpace(false, size, min_width(size));
}

ByteSpace ByteSpace::indexed(std::uint64_t size, std::size_t width) {
  if (size == 0) {
    throw DomainError("ByteSpace: empty space");
  }
  if (width < min_width(size)) {
    throw DomainError("ByteSpace: width too small for size");
  }
  return ByteSpace(false, size, width);
}

ByteSpace ByteSpace::full_bytes(std::size_t width) {
  if (width == 0) {
    throw DomainError("ByteSpace: zero width");
  }
  return ByteSpace(true, 0, width);
}

std::uint64_t ByteSpace::size() const {
  if (!full_) {
    return size_;
  }
  if (width_ > 7) {
    throw DomainError("ByteSpace: size exceeds 64 bits");
  }
  return std::uint64_t{1} << (8 * width_);
}

Bytes ByteSpace::element(std::uint64_t index) const {
  if (full_) {
    if (width_ > 7 && index >= (std::uint64_t{1} << 56)) {
      // Only the enumerable prefix is addressable by index.
      throw DomainError("ByteSpace: index out of range");
    }
    if (width_ <= 7 && index >= size()) {
      throw DomainError("ByteSpace: index out of range");
    }
    return encode_be(index, width_);
  }
  if (index >= size_) {
    throw DomainError("ByteSpace: index out of range");
  }
  return encode_be(index, width_);
}

std::optional<std::uint64_t> ByteSpace::index_of(const Bytes& value) const {
  if (value.size() != width_) {
    return std::nullopt;
  }
  if (width_ > 8) {
    throw DomainError("ByteSpace: index_of on wide space");
  }
  std::uint64_t index = decode_be(value, 0, width_);
  if (!full_ && index >= size_) {
    return std::nullopt;
  }
  return index;
}

bool ByteSpace::contains(const Bytes& value) const {
  if (value.size() != width_) {
    return false;
  }
  if (full_) {
    return true;
  }
  return decode_be(value, 0, width_) < size_;
}

Bytes ByteSpace::sample(Rng& rng) const {
  if (full_) {
    return rng.bytes(width_);
  }
  return encode_be(rng.uniform_below(size_), width_);
}

bool ByteSpace::power_of_two() const {
  if (full_) {
    return true;
  }
  return (size_ & (size_ - 1)) == 0;
}

unsigned ByteSpace::bits() const {
  if (!power_of_two()) {
    throw DomainError("ByteSpace: size is not a power of two");
  }
  if (full_) {
    return static_cast<unsigned>(8 * width_);
  }
  unsigned b = 0;
  while ((std::uint64_t{1} << b) < size_) {
    ++b;
  }
  return b;
}

}  // namespace folab
