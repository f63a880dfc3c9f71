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

#ifndef FOLAB_PKE_HPP_
#define FOLAB_PKE_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "folab/bytes.hpp"
#include "folab/rng.hpp"

namespace folab {

/// A finite space of fixed-width byte strings. Indexed spaces enumerate
/// {0, ..., size-1} in big-endian encoding, so byte-wise lexicographic
/// order equals numeric order. Full spaces cover every string of the
/// given width (size may exceed 2^64 and is not stored).
class ByteSpace {
 public:
  static ByteSpace indexed(std::uint64_t size);
  static ByteSpace indexed(std::uint64_t size, std::size_t width);
  static ByteSpace full_bytes(std::size_t width);

  bool is_full() const { return full_; }
  std::size_t width() const { return width_; }

  /// Element count; domain error for full spaces wider than 8 bytes.
  std::uint64_t size() const;
  bool enumerable() const { return !full_ || width_ <= 7; }

  Bytes element(std::uint64_t index) const;
  std::optional<std::uint64_t> index_of(const Bytes& value) const;
  bool contains(const Bytes& value) const;
  Bytes sample(Rng& rng) const;

  /// True when the element count is a power of two (always for full spaces).
  bool power_of_two() const;
  /// log2(size) for power-of-two spaces.
  unsigned bits() const;

  bool operator==(const ByteSpace& other) const = default;

 private:
  ByteSpace(bool full, std::uint64_t size, std::size_t width)
      : full_(full), size_(size), width_(width) {}

  bool full_;
  std::uint64_t size_;  // unused when full_
  std::size_t width_;
};

struct KeyPair {
  Bytes pk;
  Bytes sk;
};

/// Pluggable randomized public-key encryption scheme with declared
/// message and randomness spaces.
///
/// Contracts:
///  - encrypt is a pure function of (pk, m, r); identical inputs give
///    identical ciphertexts.
///  - decrypt never aborts; it returns nullopt for invalid ciphertexts.
class PkeScheme {
 public:
  virtual ~PkeScheme() = default;

  virtual std::string name() const = 0;
  virtual const ByteSpace& message_space() const = 0;
  virtual const ByteSpace& randomness_space() const = 0;

  virtual KeyPair keygen(Rng& rng) const = 0;
  virtual Bytes encrypt(const Bytes& pk, const Bytes& m,
                        const Bytes& r) const = 0;
  virtual std::optional<Bytes> decrypt(const Bytes& sk,
                                       const Bytes& c) const = 0;
};

}  // namespace folab

#endif  // FOLAB_PKE_HPP_
